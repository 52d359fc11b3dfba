from setuptools import find_packages, setup


def _read_requirements_file(path: str):
    with open(path) as f:
        return [req.strip() for req in f.readlines() if req.strip()]


with open("README.md") as f:
    long_description = f.read()

setup(
    name="nature-opt",
    version="0.1.0",
    description="Nature-inspired metaheuristics for continuous minimization.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="nature-opt developers",
    classifiers=[
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    python_requires=">=3.8",
    install_requires=_read_requirements_file("requirements.txt"),
    extras_require={
        "test": _read_requirements_file("requirements-dev.txt"),
    },
    packages=find_packages(
        include=["nature_opt", "nature_opt.*"],
        exclude=["tests*"],
    ),
    package_data={"nature_opt": ["model_files/*.txt"]},
    include_package_data=True,
    entry_points={"console_scripts": ["nature-opt = nature_opt.cli:main"]},
    keywords="metaheuristics optimization swarm",
)
