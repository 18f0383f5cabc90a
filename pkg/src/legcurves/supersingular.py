"""Supersingular parameters of the Legendre family.

For an odd prime p the supersingular lambdas are the (p-1)/2 roots of a
fixed polynomial with F_p coefficients (alternating-sign central
binomial coefficients), and they all live in F_{p^2}.  This module
finds them by direct scans, checks the point-group structure they
produce over F_{p^2}, and compares the number of roots lying in F_p
itself against a class-number formula whose class numbers come from an
independent reduced-forms enumeration.

The F_{p^2} root scan works on integer coordinate pairs (a, b) for
a + b*t with t a fixed generator, stepping Horner through the modulus
by hand; conjugate roots are filled in for free, which halves the scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .curve import full_four_torsion_rational, legendre
from .field import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    _is_prime,
    is_nth_power,
    make_field,
)
from .poly import Poly, deuring, distinct_root_count, pow_x_mod, substitute_neg


@dataclass
class SsTable:
    """Supersingular data for one odd prime.

    signed_prime is p with the sign making it 1 mod 4; roots are the
    supersingular lambdas in F_{p^2}, lex-sorted; prime_field_roots are
    the ones already in F_p, as plain integers; class_number is filled
    for p = 3 mod 4 and None otherwise.
    """

    p: int
    signed_prime: int
    polynomial: Poly
    roots: list
    prime_field_roots: list
    class_number: int | None


def _prime_field_roots(p, coeffs_high_first):
    roots = []
    for a in range(p):
        acc = 0
        for c in coeffs_high_first:
            acc = (acc * a + c) % p
        if acc == 0:
            roots.append(a)
    return roots


def supersingular_prime_field_count(p):
    """Number of supersingular lambdas lying in F_p, by a root scan
    that never leaves integer arithmetic (usable well past the point
    where building F_{p^2} tables would pay)."""
    if p == 2 or not _is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    rev = [int(c) for c in deuring(p).coeffs][::-1]
    return len(_prime_field_roots(p, rev))


@lru_cache(maxsize=None)
def supersingular_lambdas(p):
    """SsTable for p: all roots over F_{p^2} with conjugate pairing."""
    if p == 2 or not _is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if p * p > DEFAULT_ENUMERATION_CAP:
        raise EnumerationCapError(f"root scan over GF({p}^2) exceeds the cap")
    poly = deuring(p)
    f2 = make_field(p, 2)
    m0, m1 = f2.modulus[0], f2.modulus[1]
    rev = [int(c) for c in poly.coeffs][::-1]
    fp_roots = _prime_field_roots(p, rev)
    codes = list(fp_roots)
    # b and p - b index conjugate elements: a + b*t and (a - b*m1) - b*t
    for b in range(1, (p - 1) // 2 + 1):
        if m1 == 0:
            for a in range(p):
                ac = 0
                bc = 0
                for c in rev:
                    z = bc * b
                    ac, bc = (ac * a - z * m0 + c) % p, (ac * b + bc * a) % p
                if ac == 0 and bc == 0:
                    codes.append(a + b * p)
                    codes.append(a + (p - b) * p)
        else:
            for a in range(p):
                ac = 0
                bc = 0
                for c in rev:
                    z = bc * b
                    ac, bc = ((ac * a - z * m0 + c) % p,
                              (ac * b + bc * a - z * m1) % p)
                if ac == 0 and bc == 0:
                    codes.append(a + b * p)
                    codes.append((a - b * m1) % p + (p - b) * p)
    if len(codes) != distinct_root_count(poly, p * p):
        raise RuntimeError(
            f"root scan for p={p} disagrees with the gcd-based count")
    return SsTable(
        p=p,
        signed_prime=p if p % 4 == 1 else -p,
        polynomial=poly,
        roots=sorted(f2.from_code(c) for c in codes),
        prime_field_roots=sorted(fp_roots),
        class_number=class_number(p) if p % 4 == 3 else None,
    )


def class_number(p):
    """h for the imaginary quadratic order of discriminant -p, counted
    through reduced forms a*x^2 + b*x*y + c*y^2: b^2 - 4ac = -p,
    |b| <= a <= c, with b > 0 on the boundary |b| = a or a = c."""
    if p % 4 != 3:
        raise ValueError(f"-{p} is not a valid discriminant (need p = 3 mod 4)")
    h = 0
    for b in range(1, isqrt(p // 3) + 1, 2):
        m = (b * b + p) // 4
        for a in range(b, isqrt(m) + 1):
            if a and m % a == 0:
                c = m // a
                # (a, b, c) always reduced here; (a, -b, c) distinct
                # unless on the boundary
                h += 1 if (a == b or a == c) else 2
    return h


def verify_ss_structure(p):
    """Every supersingular E_lambda over F_{p^2} has point group
    (Z/d)^2 with d = |signed_prime - 1|."""
    table = supersingular_lambdas(p)
    d = abs(table.signed_prime - 1)
    for lam in table.roots:
        if legendre(lam.field, lam).group_structure() != (d, d):
            return False
    return True


def verify_eighth_power(p):
    """-lambda is an 8th power in F_{p^2}, two ways: element-wise on
    every root, and as divisibility of the negated-variable polynomial
    into x^((p^2-1)/8) - 1.  The two computations must agree."""
    table = supersingular_lambdas(p)
    elementwise = all(is_nth_power(-lam, 8) for lam in table.roots)
    g = substitute_neg(table.polynomial)
    e = (p * p - 1) // 8
    f = table.polynomial.field
    one = Poly(f, [f.one])
    divisibility = pow_x_mod(g, e) == one
    if elementwise != divisibility:
        raise RuntimeError(
            f"p={p}: the element-wise and polynomial 8th-power checks "
            f"disagree ({elementwise} vs {divisibility})")
    return elementwise


def verify_sp_formula(p):
    """Prime-field root count against the three-way dispatch:
    0 for p = 1 mod 4, 1 for p = 3, else three times the class number."""
    s = supersingular_prime_field_count(p)
    if p % 4 == 1:
        return s == 0
    if p == 3:
        return s == 1
    return s == 3 * class_number(p)
