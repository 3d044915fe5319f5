import setuptools

with open("./README.md", encoding="utf-8") as f:
    long_description = f.read()
with open("./src/detpoly/about.py", encoding="utf-8") as f:
    about = {}
    exec(f.read(), about)
setuptools.setup(
    name="detpoly",
    version=about["__version__"],
    packages=setuptools.find_packages("src"),
    package_dir={"": "src"},
    description="Decide whether a polynomial is determined by a polynomial map, with certificates",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.11",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: MacOS",
        "Operating System :: POSIX :: Linux",
        "Operating System :: Microsoft :: Windows",
    ],
    python_requires=">=3.10",
    install_requires=["ply>=3.11"],
    entry_points={"console_scripts": ["detpoly = detpoly:main"]},
)
