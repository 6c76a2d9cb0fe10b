import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).parent.resolve()
        # directory where setuptools expects koobf/_core*.so to appear
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S",
            str(source_dir),
            "-B",
            str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DKOOBF_BUILD_PYTHON=ON",
            "-DKOOBF_BUILD_CLI=OFF",
            "-DKOOBF_BUILD_TESTS=OFF",
            f"-DKOOBF_PY_OUTPUT_DIR={out_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "koobf_py", "-j"],
            check=True,
        )


setup(
    packages=["koobf"],
    package_dir={"koobf": "python/koobf"},
    ext_modules=[CMakeExtension("koobf._core")],
    cmdclass={"build_ext": CMakeBuild},
)
