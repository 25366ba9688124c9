import setuptools

with open("README.md", "r", encoding="utf-8") as fhand:
    long_description = fhand.read()

setuptools.setup(
    name="pseudobracket",
    version="1.0.0",
    description=("Pseudo bracket polynomial of pseudo link diagrams "
                 "and a cosmetic crossing obstruction"),
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    install_requires=["numpy", "tqdm", "pandas", "sympy"],
    packages=setuptools.find_packages(exclude=["test"]),
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "pseudobracket = pseudobracket.cli:main",
            "pbracket = pseudobracket.bracket.cli:main",
            "pbscan = pseudobracket.obstruction.cli:main",
            "pbfuzz = pseudobracket.moves.cli:main",
            "pbingest = pseudobracket.ingest.cli:main",
        ]
    }
)
