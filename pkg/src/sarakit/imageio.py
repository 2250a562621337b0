"""Binary PGM (P5) read/write and log-scale rendering helpers.

Images travel as float arrays in [0, 1]; files are 8- or 16-bit binary PGM.
"""

import numpy as np

from .errors import DimensionError


def read_pgm(path) -> np.ndarray:
    """Read a binary PGM into a float array scaled to [0, 1]."""
    with open(path, "rb") as fh:
        data = fh.read()
    if not data.startswith(b"P5"):
        raise ValueError(f"{path} is not a binary PGM file")
    fields = []
    pos = 2
    while len(fields) < 3:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        fields.append(int(data[start:pos]))
    pos += 1  # single whitespace after maxval
    width, height, maxval = fields
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    pixels = np.frombuffer(data, dtype=dtype, count=width * height, offset=pos)
    return pixels.reshape(height, width).astype(float) / maxval


def write_pgm(path, img: np.ndarray, bits: int = 16) -> None:
    """Write a [0, 1] float image as binary PGM; values are clipped."""
    img = np.asarray(img, dtype=float)
    if img.ndim != 2:
        raise DimensionError(f"expected 2D image, got shape {img.shape}")
    if bits not in (8, 16):
        raise ValueError("bits must be 8 or 16")
    maxval = (1 << bits) - 1
    quant = np.rint(np.clip(img, 0.0, 1.0) * maxval)
    dtype = np.dtype(">u2") if bits == 16 else np.dtype("u1")
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n{maxval}\n".encode()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(quant.astype(dtype).tobytes())


def log_rescale(img: np.ndarray, decades: float = 3.0) -> np.ndarray:
    """Map a nonnegative image to [0, 1] on a log10 scale over `decades`.

    Values below peak * 10^-decades clip to 0; used for radio-style display
    of high-dynamic-range reconstructions.
    """
    img = np.maximum(np.asarray(img, dtype=float), 0.0)
    peak = img.max()
    if peak <= 0:
        return np.zeros_like(img)
    floor = peak * 10.0 ** (-decades)
    scaled = np.log10(np.maximum(img, floor) / floor) / decades
    return scaled
