"""8-bit raster I/O (PNG, binary PPM/PGM) mapped linearly to [0, 1]."""

from pathlib import Path

import numpy as np
from PIL import Image as PILImage

from .errors import InvalidInputError

IMAGE_SUFFIXES = (".png", ".ppm", ".pgm", ".pnm")


def list_images(directory):
    """Image files in ``directory``, sorted lexicographically by filename."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    return sorted(
        (p for p in directory.iterdir() if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES),
        key=lambda p: p.name,
    )


def load_image(path):
    """Read an image as a float64 ``(C, H, W)`` array in [0, 1].

    Grayscale files give one channel; everything else is converted to RGB.
    """
    with PILImage.open(path) as im:
        im.load()
        if im.mode.startswith("I") or im.mode == "F":
            raise InvalidInputError(f"{path}: only 8-bit images are supported, got mode {im.mode!r}")
        if im.mode in ("1", "L", "LA"):
            arr = np.asarray(im.convert("L"), dtype=np.float64)[None]
        else:
            arr = np.asarray(im.convert("RGB"), dtype=np.float64).transpose(2, 0, 1)
    return arr / 255.0


def to_uint8(image):
    return np.round(np.clip(np.asarray(image), 0.0, 1.0) * 255.0).astype(np.uint8)


def save_image(path, image):
    """Write a ``(C, H, W)`` or ``(H, W)`` array in [0, 1] as an 8-bit raster.

    Format follows the file suffix. PPM requires 3 channels, PGM 1.
    """
    path = Path(path)
    arr = np.asarray(image)
    if arr.ndim == 3 and arr.shape[0] == 1:
        arr = arr[0]
    q = to_uint8(arr)
    if q.ndim == 3:
        if q.shape[0] != 3:
            raise InvalidInputError(f"cannot write {q.shape[0]}-channel image")
        pil = PILImage.fromarray(np.ascontiguousarray(q.transpose(1, 2, 0)), mode="RGB")
    else:
        pil = PILImage.fromarray(q, mode="L")
    suffix = path.suffix.lower()
    if suffix == ".png":
        pil.save(path, format="PNG")
    elif suffix in (".ppm", ".pgm", ".pnm"):
        if suffix == ".pgm" and pil.mode != "L":
            pil = pil.convert("L")
        if suffix == ".ppm" and pil.mode != "RGB":
            pil = pil.convert("RGB")
        pil.save(path, format="PPM")
    else:
        raise InvalidInputError(f"unsupported output format {suffix!r}")
