"""Command line interface.  Output is line oriented, fields separated by tabs."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cipher
from .codec import digits_of, rank, unrank
from .errors import DomainError, FormatError
from .family import GroupFamily
from .inversions import inv, inv_i_fast, inv_i_oracle, inv_oracle, inv_vector
from .numsys import builtin_system, decode_digits, encode_natural, format_digit_string, parse_digit_string
from .perm import enumerate_family, format_window, identity, parse_window

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

FAMILIES = [f.value for f in GroupFamily]


def _inputs(values, stdin) -> list[str]:
    """Records from standard input when it carries any, else the positional arguments."""
    if stdin is not None:
        try:
            interactive = stdin.isatty()
        except (AttributeError, ValueError, OSError):
            interactive = True
        if not interactive:
            try:
                lines = [ln.strip() for ln in stdin.read().splitlines()]
            except OSError:
                lines = []
            lines = [ln for ln in lines if ln]
            if lines:
                return lines
    return list(values)


def _natural(text: str) -> int:
    text = text.strip()
    if not (text.isascii() and text.isdigit()):
        raise FormatError(f"not a natural number: {text!r}")
    return int(text)


def _system_for(family, n):
    if n is None:
        return builtin_system(family, family.min_n)
    return builtin_system(family, n)


def cmd_ns(args, out, records):
    family = GroupFamily(args.family)
    ns = _system_for(family, args.n)
    for rec in records:
        if args.action == "encode":
            m = _natural(rec)
            if args.n is not None and m >= ns.capacity:
                raise DomainError(f"{m} does not fit in {family.value}_{args.n} (capacity {ns.capacity})")
            print(format_digit_string(encode_natural(ns, m)), file=out)
        else:
            print(decode_digits(parse_digit_string(rec, ns)), file=out)


def cmd_rank(args, out, records):
    family = GroupFamily(args.family)
    for rec in records:
        print(rank(parse_window(rec), family), file=out)


def cmd_unrank(args, out, records):
    family = GroupFamily(args.family)
    for rec in records:
        print(format_window(unrank(_natural(rec), args.n, family)), file=out)


def cmd_stats(args, out, records):
    for rec in records:
        pi = parse_window(rec)
        vec = ",".join(str(v) for v in inv_vector(pi))
        digits = format_digit_string(digits_of(pi, GroupFamily.B), keep_zeros=True)
        print(f"{format_window(pi)}\t{inv(pi)}\t{vec}\t{digits}", file=out)


def cmd_enumerate(args, out, records):
    family = GroupFamily(args.family)
    if args.n < family.min_n:
        raise DomainError(f"family {family.value} needs n >= {family.min_n}")
    rows = sorted((rank(pi, family), pi) for pi in enumerate_family(family, args.n))
    for r, pi in rows:
        digits = format_digit_string(digits_of(pi, family), keep_zeros=True)
        print(f"{r}\t{format_window(pi)}\t{digits}", file=out)


def _key(args) -> cipher.CipherKey:
    key = cipher.CipherKey(parse_window(args.key))
    if args.n is not None and args.n != key.n:
        raise DomainError(f"--n {args.n} does not match the key size {key.n}")
    return key


def cmd_crypt(args, out, records):
    if args.action == "keygen":
        print(format_window(cipher.keygen(args.n, args.seed).key), file=out)
        return
    key = _key(args)
    data = Path(args.input).read_bytes()
    if args.action == "enc":
        result = cipher.encrypt_stream(data, key)
    else:
        result = cipher.decrypt_stream(data, key)
    Path(args.output).write_bytes(result)


def _selftest_checks(max_n=4):
    for n in range(1, max_n + 1):
        group = list(enumerate_family("B", n))
        yield f"oracle n={n}", all(
            inv_i_fast(pi, i) == inv_i_oracle(pi, i) for pi in group for i in range(1, n + 1)
        ) and all(sum(inv_vector(pi)) == inv_oracle(pi) for pi in group)
    for family in GroupFamily:
        for n in range(family.min_n, max_n + 1):
            members = list(enumerate_family(family, n))
            ranks = sorted(rank(pi, family) for pi in members)
            ok = ranks == list(range(family.order(n)))
            ok = ok and all(unrank(rank(pi, family), n, family) == pi for pi in members)
            yield f"bijection {family.value} n={n}", ok
    for n in range(1, max_n + 1):
        key = cipher.keygen(n, seed=n)
        order = GroupFamily.B.order(n)
        yield f"cipher n={n}", all(
            cipher.decrypt_block(cipher.encrypt_block(m, key), key) == m for m in range(order)
        )
    yield "identity rank", all(rank(identity(n), f) == 0 for f in GroupFamily for n in range(f.min_n, max_n + 1))


def cmd_selftest(args, out, records):
    failed = 0
    for name, ok in _selftest_checks():
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}\t{name}", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signedrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def family_opt(p):
        p.add_argument("--family", required=True, choices=FAMILIES, type=str.upper)

    p = sub.add_parser("ns", help="convert between naturals and family digit strings")
    ns_sub = p.add_subparsers(dest="action", required=True)
    for action, metavar in (("encode", "NATURAL"), ("decode", "DIGITS")):
        q = ns_sub.add_parser(action)
        family_opt(q)
        q.add_argument("--n", type=int, help="group size; omit for an unbounded system")
        q.add_argument("values", nargs="*", metavar=metavar)
        q.set_defaults(func=cmd_ns)

    p = sub.add_parser("rank", help="rank windows read from stdin or arguments")
    family_opt(p)
    p.add_argument("values", nargs="*", metavar="WINDOW")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="unrank naturals read from stdin or arguments")
    family_opt(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("values", nargs="*", metavar="RANK")
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("stats", help="window, inv, inv vector and B digit string")
    p.add_argument("values", nargs="*", metavar="WINDOW")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="table of rank, window and digits for a whole family")
    family_opt(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate, values=[])

    p = sub.add_parser("crypt", help="toy permutation cipher")
    crypt_sub = p.add_subparsers(dest="action", required=True)
    q = crypt_sub.add_parser("keygen", help="print a random key window")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int)
    q.set_defaults(func=cmd_crypt, values=[])
    for action in ("enc", "dec"):
        q = crypt_sub.add_parser(action)
        q.add_argument("--key", required=True, help='key window, e.g. "[3,-1,2,4]"')
        q.add_argument("--n", type=int, help="check the key size")
        q.add_argument("--seed", type=int, help="ignored; accepted for symmetry with keygen")
        q.add_argument("input")
        q.add_argument("output")
        q.set_defaults(func=cmd_crypt, values=[])

    p = sub.add_parser("selftest", help="oracle and bijection checks for n <= 4")
    p.set_defaults(func=cmd_selftest, values=[])
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    records = args.values
    if args.func in (cmd_ns, cmd_rank, cmd_unrank, cmd_stats):
        records = _inputs(args.values, sys.stdin if stdin is None else stdin)
    try:
        return args.func(args, out, records) or 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
