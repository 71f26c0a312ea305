from setuptools import setup, find_packages

setup(
    name="hullforge",
    version="0.1.0",
    description="Exact hulls, Gramian diagonalization and EAQECC parameters for linear codes over finite fields.",
    packages=find_packages(exclude=["tests"]),  # Automatically find the `hullforge` package
    python_requires=">=3.10",
    install_requires=[
        "numpy",
        "galois",
        "tqdm",
        "pyyaml"
    ],
    extras_require={
        "test": [
            "pytest>=6.0",
            "pytest-cov",
            "pytest-mock"
        ]
    },
    entry_points={
        "console_scripts": [
            # Register `main` as the CLI entry point
            "hullforge=hullforge.cli:HullforgeCLI.main",
        ],
    },
)
