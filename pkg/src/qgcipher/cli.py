"""Command-line entry point: ``qgcipher <verb> ...``.

Exit codes: 0 success, 2 validation failure, 3 I/O error, 4 codec error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import codec as codec_mod
from .cipher import OddLength, decrypt, encrypt
from .codec import Codec, SymbolOutOfRange
from .keyfile import InfeasibleConstraints, InvalidKeyFile, keygen, validate
from .modring import CompositeModulus, ModulusMismatch, NotAUnit
from .quasigroup import TQuasigroup
from .verify import MAX_BRUTE, ModulusTooLarge, census, census_csv, census_summary
from .worked import run_demo

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_CODEC = 0, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, msg: str):
        self.code = code
        super().__init__(msg)


def _read(path: str, binary: bool):
    try:
        if path == "-":
            return sys.stdin.buffer.read() if binary else sys.stdin.read()
        with open(path, "rb" if binary else "r") as f:
            return f.read()
    except OSError as e:
        raise _Fail(EXIT_IO, f"cannot read {path}: {e}") from None


def _write(path: str, data):
    try:
        if path == "-":
            if isinstance(data, bytes):
                sys.stdout.buffer.write(data)
                sys.stdout.buffer.flush()
            else:
                sys.stdout.write(data)
            return
        with open(path, "wb" if isinstance(data, bytes) else "w") as f:
            f.write(data)
    except OSError as e:
        raise _Fail(EXIT_IO, f"cannot write {path}: {e}") from None


def _load_key(path: str, strict: bool = False):
    text = _read(path, binary=False)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise _Fail(EXIT_INVALID, f"{path}: not valid JSON ({e})") from None
    rep = validate(doc, strict=strict)
    return rep


def cmd_keygen(args) -> int:
    try:
        doc = keygen(args.seed, p=args.modulus, steps=args.steps, mode=args.mode)
    except (CompositeModulus, InfeasibleConstraints, InvalidKeyFile) as e:
        raise _Fail(EXIT_INVALID, str(e)) from None
    _write(args.out, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_validate(args) -> int:
    rep = _load_key(args.key, strict=args.strict)
    for line in rep.lines():
        print(line)
    return EXIT_OK if rep.ok else EXIT_INVALID


def _run_cipher(args, decrypting: bool) -> int:
    rep = _load_key(args.key)
    if not rep.ok:
        for line in rep.lines():
            print(line, file=sys.stderr)
        return EXIT_INVALID
    key = rep.schedule
    trace = [] if args.trace else None
    binary = args.mode == "bytes"
    raw = _read(args.inp, binary=True)
    try:
        if binary:
            c = Codec(key.n, "bytes")
            syms = codec_mod.unpack_symbols(raw) if decrypting else c.encode(raw)
        else:
            syms = codec_mod.parse_symbols(raw.decode("ascii"))
        out = (decrypt if decrypting else encrypt)(key, syms, trace=trace)
        if binary:
            data = c.decode(out) if decrypting else codec_mod.pack_symbols(out)
        else:
            data = codec_mod.format_symbols(out) + "\n"
    except (SymbolOutOfRange, OddLength, ModulusMismatch, UnicodeDecodeError, ValueError) as e:
        raise _Fail(EXIT_CODEC, str(e)) from None
    if trace is not None:
        for t in trace:
            print(t, file=sys.stderr)
    _write(args.out, data)
    return EXIT_OK


def cmd_encrypt(args) -> int:
    return _run_cipher(args, decrypting=False)


def cmd_decrypt(args) -> int:
    return _run_cipher(args, decrypting=True)


def cmd_demo(args) -> int:
    return EXIT_OK if run_demo() else EXIT_INVALID


def cmd_census(args) -> int:
    try:
        rows = census(args.modulus)
    except (CompositeModulus, ModulusTooLarge) as e:
        raise _Fail(EXIT_INVALID, str(e)) from None
    _write(args.out, census_csv(rows))
    for k, v in census_summary(rows).items():
        print(f"{k}: {v}", file=sys.stderr)
    return EXIT_OK


def cmd_cayley(args) -> int:
    if args.modulus > MAX_BRUTE:
        raise _Fail(EXIT_INVALID, f"modulus {args.modulus} exceeds {MAX_BRUTE}")
    try:
        q = TQuasigroup(args.phi, args.psi, args.c, args.modulus)
    except (NotAUnit, ValueError) as e:
        raise _Fail(EXIT_INVALID, str(e)) from None
    table = q.cayley_table()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["*", *range(q.n)])
    for x, row in enumerate(table):
        w.writerow([x, *row.tolist()])
    _write(args.out, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qgcipher", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    k = sub.add_parser("keygen", help="generate a key file")
    k.add_argument("--seed", required=True)
    k.add_argument("--modulus", type=int, default=313)
    k.add_argument("--steps", type=int, default=3)
    k.add_argument("--mode", choices=["generalized", "markovski"], default="generalized")
    k.add_argument("--out", default="-")
    k.set_defaults(func=cmd_keygen)

    v = sub.add_parser("validate", help="check a key file")
    v.add_argument("--key", required=True)
    v.add_argument("--strict", action="store_true", help="forbid repeated powers across steps")
    v.set_defaults(func=cmd_validate)

    for name, func in (("encrypt", cmd_encrypt), ("decrypt", cmd_decrypt)):
        e = sub.add_parser(name, help=f"{name} a file or stdin")
        e.add_argument("--key", required=True, help="JSON key file")
        e.add_argument("--in", dest="inp", default="-", help="input path, - for stdin")
        e.add_argument("--out", default="-", help="output path, - for stdout")
        e.add_argument("--mode", choices=["text", "bytes"], default="bytes",
                       help="text: '; '-separated symbols; bytes: raw plaintext bytes, "
                            "ciphertext as 2-byte big-endian symbols")
        e.add_argument("--trace", action="store_true", help="print per-pair intermediates to stderr")
        e.set_defaults(func=func)

    d = sub.add_parser("demo", help="run the Z_313 reference example")
    d.set_defaults(func=cmd_demo)

    c = sub.add_parser("ortho-census", help="CSV of parastrophe orthogonality for every unit pair")
    c.add_argument("--modulus", type=int, required=True)
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_census)

    t = sub.add_parser("cayley", help="CSV Cayley table of phi*x + psi*y + c")
    t.add_argument("--phi", type=int, required=True)
    t.add_argument("--psi", type=int, required=True)
    t.add_argument("--c", type=int, default=0)
    t.add_argument("--modulus", type=int, required=True)
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_cayley)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
