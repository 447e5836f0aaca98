from setuptools import setup, find_packages

setup(
    name="faht-stream",
    version="0.1.0",
    author="Your Name",
    author_email="your.email@example.com",
    description="Fairness-aware Hoeffding trees and prequential fairness evaluation for data streams",
    long_description = open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    url="https://github.com/yourusername/faht-stream",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
    install_requires=[
        "requests>=2.28.0",
        "python-dotenv>=1.0.0",
        "pydantic>=2.0.0",
        "cachetools>=5.3.0",
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pandas>=2.0.0",
        "statsmodels>=0.14.0",
        "liac-arff>=2.5.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.0.0",
            "responses>=0.23.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "faht=faht.__main__:main",
        ],
    },
)
