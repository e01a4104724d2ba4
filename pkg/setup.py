from setuptools import setup, find_packages


def read_version():
    version = {}
    with open('semimono/version.py', 'r') as f:
        exec(f.read(), version)
        return version['__version__']


def read_requirements(path: str) -> list[str]:
    with open(path, 'r') as f:
        return [line.strip() for line in f if line.strip() and not line.startswith('#')]


setup(
    name='centrality-semimono',
    version=read_version(),
    description='Exact closeness, harmonic and betweenness centrality with machine-checked '
                'semi-monotonicity under edge addition',
    author='alex',
    author_email='rexa222@outlook.com',
    packages=find_packages(include=['semimono', 'semimono.*']),
    python_requires='>=3.12',
    install_requires=read_requirements('requirements.txt'),
    extras_require={'test': read_requirements('requirements-test.txt')},
    entry_points={'console_scripts': ['semimono = semimono.cli:main']},
)
