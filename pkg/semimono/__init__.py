from semimono.centrality import ScoreVector, betweenness, closeness, harmonic, pair_dependency, score_vector
from semimono.graph import DistanceMatrix, Graph, PathCountMatrix, UNREACHABLE
from semimono.scenario import EdgeAdditionScenario
from semimono.version import __version__
