from setuptools import setup, find_packages

setup(
    name="displacement-calculus",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "rich>=13.0.0",
        "pandas>=1.5.0",
    ],
    entry_points={
        "console_scripts": [
            "displacement-calculus=displacement_calculus.cli:main",
        ],
    },
    python_requires=">=3.10",
)
