"""Decimal conversion for naturals of any size.

CPython caps ``int(str)`` and ``str(int)`` at a few thousand digits by
default; these helpers split large values so the cap never triggers and no
global interpreter state is touched.
"""

_CHUNK = 4000
_CHUNK_BITS = 13000  # 10**4000 needs ~13288 bits


def to_decimal(n: int) -> str:
    if n < 0:
        raise ValueError("naturals only")
    if n.bit_length() < _CHUNK_BITS:
        return str(n)
    # split roughly in half by digit count
    half = int(n.bit_length() * 0.30103) // 2
    hi, lo = divmod(n, 10 ** half)
    return to_decimal(hi) + to_decimal(lo).zfill(half)


def from_decimal(s: str) -> int:
    if not s or not s.isascii() or not s.isdigit():
        raise ValueError(f"not a decimal natural: {s[:40]!r}")
    if len(s) <= _CHUNK:
        return int(s)
    mid = len(s) // 2
    lo = s[mid:]
    return from_decimal(s[:mid]) * 10 ** len(lo) + from_decimal(lo)


def digit_count(n: int) -> int:
    if n == 0:
        return 1
    d = int((n.bit_length() - 1) * 0.30102999566398120) + 1
    # correct the float estimate
    while 10 ** (d - 1) > n:
        d -= 1
    while 10 ** d <= n:
        d += 1
    return d
