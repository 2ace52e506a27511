from os import listdir, path
from subprocess import run
from tempfile import TemporaryDirectory

import pytest
from app.core.settings import Settings


@pytest.mark.integration
@pytest.mark.timeout(300)
def test_uvx_with_built_package(uv_path: str, uvx_path: str) -> None:
    settings = Settings()

    with TemporaryDirectory() as temp_build_dir:
        # Step 1: Build the package
        run(  # noqa: S603
            [uv_path, "build", "--out-dir", temp_build_dir],
            shell=False,
            check=True,
        )

        # Step 2: Locate the built wheel file
        wheel_files = [f for f in listdir(temp_build_dir) if f.endswith(".whl")]
        print(f"Wheel files found: {wheel_files}")
        assert wheel_files, "No wheel file found after uv build"
        wheel_path = path.join(temp_build_dir, wheel_files[0])

        # Step 3: Run uvx with the built package against the bundled corpus
        proc = run(  # noqa: S603
            [
                uvx_path,
                "--from",
                f"file://{wheel_path}",
                settings.PACKAGE_NAME,
                "--format",
                "records",
                "cohomology",
                "triangle",
                "-k",
                "1",
            ],
            shell=False,
            capture_output=True,
            text=True,
            timeout=240,
        )
        print("uvx stdout:", proc.stdout)
        print("uvx stderr:", proc.stderr)

        # Step 4: The corpus ships inside the wheel
        assert proc.returncode == 0
        assert proc.stdout.strip() == "type=cohomology name=triangle degree=1 cech=Z nerve=Z space=Z generators=1"
