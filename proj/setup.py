import shutil
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
        build_temp = Path(self.build_temp).resolve()
        build_temp.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DWLAB_BUILD_PYTHON=ON",
            ],
            cwd=build_temp,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_wlab", "-j"],
            cwd=build_temp,
            check=True,
        )

        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        built = sorted((build_temp / "python" / "wlab").glob("_wlab.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _wlab extension")
        shutil.copy2(built[0], target)


setup(
    ext_modules=[CMakeExtension("wlab._wlab")],
    cmdclass={"build_ext": CMakeBuild},
)
