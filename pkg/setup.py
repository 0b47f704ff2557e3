from setuptools import setup, find_packages

setup(
    name="radmax",
    version="0.1.0",
    packages=find_packages('src'),
    package_dir={"": "src"},
    install_requires=[
        'networkx',
        'numpy',
        'pydot<4',
        'scipy',
    ],
    extras_require={
        'test': [
            'hypothesis',
            'pytest',
        ],
    },
    entry_points={
        'console_scripts': [
            'radmax=radmax.cli:main',
        ],
    },
)
