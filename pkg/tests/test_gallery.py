import runpy
from pathlib import Path

import pytest

GALLERY = Path(__file__).resolve().parent.parent / "gallery"


@pytest.mark.parametrize("script", sorted(GALLERY.glob("plot_*.py")), ids=lambda p: p.stem)
def test_gallery_script_runs(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    assert capsys.readouterr().out
