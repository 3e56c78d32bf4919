"""Field-context construction and the text context-file format.

A context file is a list of ``key=value`` lines::

    p=2
    n=3
    modulus=b
    delta=1
    table=1,4,6

Binary fields write hex (bit i is the coefficient of t^i); ternary fields
write trit strings c_{k-1}...c_0.  ``table`` is the solver table and is
checked against a fresh computation on load.
"""

from . import gf2, gf3
from .gf2 import FieldCtx2, setup_gf2
from .gf3 import FieldCtx3, setup_gf3


def setup(p, n):
    if p == 2:
        return setup_gf2(n)
    if p == 3:
        return setup_gf3(n)
    raise ValueError(f"p must be 2 or 3, got {p}")


def dumps(field):
    return field.dumps()


def loads(text):
    rec = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed context line {line!r}")
        rec[key.strip()] = value.strip()
    try:
        p, n = int(rec["p"]), int(rec["n"])
        modulus, delta = rec["modulus"], rec["delta"]
    except KeyError as exc:
        raise ValueError(f"context is missing field {exc}") from None
    if p == 2:
        m = int(modulus, 16)
        if not gf2.is_irreducible(m):
            raise ValueError("modulus is not irreducible")
        field = FieldCtx2(n, m, int(delta, 16))
    elif p == 3:
        m = FieldCtx3.from_int(int(modulus, 3))
        if not gf3.is_irreducible(m):
            raise ValueError("modulus is not irreducible")
        field = FieldCtx3(n, m, FieldCtx3.from_int(int(delta, 3)))
    else:
        raise ValueError(f"p must be 2 or 3, got {p}")
    if "table" in rec:
        stored = rec["table"].split(",")
        fresh = field.dumps().splitlines()[-1].partition("=")[2].split(",")
        if stored != fresh:
            raise ValueError("stored solver table does not match the modulus and delta")
    return field


def load(path):
    with open(path) as fh:
        return loads(fh.read())


def save(field, path):
    with open(path, "w") as fh:
        fh.write(field.dumps())
