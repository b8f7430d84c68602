"""Line-oriented code-set files and JSON report files.

Code-set layout: first line is a JSON header (family kind, generator
polynomial, theta as a power of alpha, index-set and ordering rules, symbol
count, packing); every following line is "<code id> <hex>", symbols packed
MSB first, 2 bits per quaternary symbol or 1 bit per binary symbol, zero
padded to a byte boundary.  Hex keeps the files diff-able and inspectable
while staying compact; round trips are bit-exact.
"""

import dataclasses
import json
import math

import numpy as np

from . import codegen
from .gf2m import from_dual_coords


@dataclasses.dataclass
class RawCode:
    """Binary code carried by label only (external or synthetic sets)."""
    label: str
    bits: np.ndarray


def _pack(symbols, bps):
    bits = np.zeros(len(symbols) * bps, dtype=np.uint8)
    arr = np.asarray(symbols, dtype=np.uint8)
    for b in range(bps):
        bits[b::bps] = (arr >> (bps - 1 - b)) & 1
    return np.packbits(bits).tobytes().hex()


def _unpack(hexstr, count, bps):
    bits = np.unpackbits(np.frombuffer(bytes.fromhex(hexstr), dtype=np.uint8))
    if len(bits) < count * bps:
        raise ValueError("line too short for %d symbols" % count)
    bits = bits[:count * bps].reshape(count, bps)
    out = np.zeros(count, dtype=np.int16)
    for b in range(bps):
        out = (out << 1) | bits[:, b]
    return out.astype(np.int8)


def store_codeset(family, path):
    """Write a FamilySet; quaternary codes use .symbols, binary use .bits."""
    quaternary = hasattr(family.codes[0], "symbols")
    bps = 2 if quaternary else 1
    length = len(family.codes[0].symbols if quaternary
                 else family.codes[0].bits)
    header = dict(family.metadata)
    header.setdefault("family", family.kind)
    header["alphabet"] = "quaternary" if quaternary else "binary"
    header["symbols_per_code"] = length
    header["bits_per_symbol"] = bps
    header["count"] = len(family)
    header["packing"] = "msb-first, zero padded to byte boundary"
    with open(path, "w") as f:
        f.write(json.dumps(header, sort_keys=True) + "\n")
        for code in family.codes:
            data = code.symbols if quaternary else code.bits
            f.write("%s %s\n" % (code.label, _pack(data, bps)))
    return path


def _code_from_label(label, data, quaternary):
    """Rebuild a typed code from its id when the label follows the family
    naming; anything else loads as a RawCode."""
    parts = label.split("-")
    try:
        if quaternary and len(parts) == 2:
            x, h = int(parts[0][1:]), int(parts[1][1:])
            return codegen.QuaternaryCode(
                codegen.CodeIndex(x, from_dual_coords(h)), data)
        if not quaternary and len(parts) == 3 and parts[0] in ("v", "w"):
            x, h = int(parts[1][1:]), int(parts[2][1:])
            phase = "QP" if parts[0] == "v" else "IP"
            return codegen.BinaryCode(
                codegen.CodeIndex(x, from_dual_coords(h)), phase, data)
    except ValueError:
        pass
    return RawCode(label, data)


def load_codeset(path):
    """Read a code-set file back into a FamilySet, bit-exactly."""
    with open(path) as f:
        try:
            header = json.loads(f.readline())
        except json.JSONDecodeError as e:
            raise ValueError("malformed code-set header: %s" % e)
        for key in ("family", "version", "symbols_per_code",
                    "bits_per_symbol", "count"):
            if key not in header:
                raise ValueError("code-set header missing %r" % key)
        length = header["symbols_per_code"]
        bps = header["bits_per_symbol"]
        quaternary = bps == 2
        codes = []
        for line in f:
            if not line.strip():
                continue
            label, hexstr = line.split()
            codes.append(_code_from_label(label, _unpack(hexstr, length, bps),
                                          quaternary))
    if len(codes) != header["count"]:
        raise ValueError("expected %d codes, found %d"
                         % (header["count"], len(codes)))
    return codegen.FamilySet(header["family"], codes, header)


def profile_dict(profile):
    d = dataclasses.asdict(profile)
    # JSON has no -inf; the sentinel survives as a string
    for k, v in list(d.items()):
        if isinstance(v, float) and math.isinf(v):
            d[k] = "-inf"
    return d


def write_report(profile, path, environment=None):
    """Report file: the profile (every dB field next to its magnitude) plus
    the conventions needed to reproduce it."""
    env = {
        "odd_convention": profile.odd_convention,
        "auto_excludes_zero_shift": True,
        "cross_includes_zero_shift": True,
        "rms_and_percentiles": "all included values; cross_only variant inside",
        "percentile_method": "nearest-rank",
        "db_normalization_length": profile.length,
    }
    env.update(environment or {})
    with open(path, "w") as f:
        json.dump({"profile": profile_dict(profile), "environment": env},
                  f, indent=1, sort_keys=True)
        f.write("\n")
    return path


def load_report(path):
    with open(path) as f:
        return json.load(f)


def write_cdf_csv(profile, path):
    """CDF as two-column CSV, one row per integer magnitude up to the max."""
    with open(path, "w") as f:
        f.write("magnitude,percent\n")
        for mag, frac in profile.cdf:
            f.write("%d,%.4f\n" % (mag, 100.0 * frac))
    return path
