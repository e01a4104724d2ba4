from semimono.tools.connected_graph_enumerator import count_connected_graphs, enumerate_connected_graphs
from semimono.tools.naive_betweenness_oracle import naive_betweenness_oracle
from semimono.tools.pointwise_inequality_checker import verify_pointwise_inequalities
from semimono.tools.random_graph_generator import random_connected_graph, random_connected_graphs
from semimono.tools.report_writer import write_report
from semimono.tools.sweep_runner import run_sweep
