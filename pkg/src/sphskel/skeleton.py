"""Spherical skeletons (Delta, S^p, Sigma, Gamma) and their combinatorics.

A skeleton bundles a root system, the parabolic subset S^p, the linearly
independent spherically closed spherical roots Sigma, the colors Delta
(each with its functional rho restricted to Sigma) and the boundary
divisors Gamma (nonpositive integer pairings).  All values are exact; the
functional of a color is stored explicitly, with an optional coroot
reference kept purely as a consistency cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from sphskel import exactlp, rootsys
from sphskel.rootsys import RootSystem

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SkeletonInvariantError(ValueError):
    """A skeleton invariant is violated; .invariant names which one."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


@dataclass(frozen=True)
class Color:
    """A color D with its functional rho(D) restricted to Sigma.

    ``coroot`` optionally records that rho(D) = scale * alpha_idx^vee; the
    explicit ``rho`` vector stays authoritative and the reference is only
    validated against it.  ``moved_by`` lists the simple roots alpha with
    D in Delta(alpha); it drives the anticanonical multiplicity m_D.
    """

    name: str
    rho: tuple[Fraction, ...]
    moved_by: tuple[int, ...]
    coroot: tuple[int, Fraction] | None = None


@dataclass(frozen=True)
class BoundaryDivisor:
    name: str
    rho: tuple[int, ...]


@dataclass(frozen=True)
class SphericalSkeleton:
    root_system: RootSystem
    sp: frozenset[int]
    sigma: tuple[tuple[int, ...], ...]
    colors: tuple[Color, ...]
    boundary: tuple[BoundaryDivisor, ...]

    def __post_init__(self):
        _validate(self)

    @property
    def divisors(self) -> tuple:
        """The set D = Delta u Gamma, colors first."""
        return self.colors + self.boundary


def _validate(sk: SphericalSkeleton) -> None:
    rank = sk.root_system.rank
    nsig = len(sk.sigma)
    for idx in sk.sp:
        if not 0 <= idx < rank:
            raise SkeletonInvariantError("sp-range", f"index {idx} out of range")
    for g in sk.sigma:
        if len(g) != rank:
            raise SkeletonInvariantError("sigma-length", f"{g} has wrong length")
    if nsig and exactlp.matrix_rank(sk.sigma) != nsig:
        raise SkeletonInvariantError("sigma-independent", "sigma is linearly dependent")
    for color in sk.colors:
        if len(color.rho) != nsig:
            raise SkeletonInvariantError(
                "color-rho-length", f"{color.name}: expected {nsig} values"
            )
        if any(Fraction(v).denominator not in (1, 2) for v in color.rho):
            raise SkeletonInvariantError(
                "color-rho-denominator",
                f"{color.name}: values must be integral or half-integral",
            )
        if not color.moved_by:
            raise SkeletonInvariantError(
                "color-moved-by", f"{color.name} is moved by no simple root"
            )
        if any(not 0 <= idx < rank for idx in color.moved_by):
            raise SkeletonInvariantError(
                "moved-by-range", f"{color.name}: simple-root index out of range"
            )
        if color.coroot is not None:
            idx, scale = color.coroot
            expect = tuple(
                scale * rootsys.coroot_pairing(sk.root_system, idx, g) for g in sk.sigma
            )
            if tuple(color.rho) != expect:
                raise SkeletonInvariantError(
                    "color-coroot-consistent",
                    f"{color.name}: stored rho {color.rho} != {scale}*alpha_{idx}^vee {expect}",
                )
    for div in sk.boundary:
        if len(div.rho) != nsig:
            raise SkeletonInvariantError(
                "boundary-rho-length", f"{div.name}: expected {nsig} values"
            )
        if any(v > 0 for v in div.rho):
            raise SkeletonInvariantError(
                "boundary-nonpositive", f"{div.name}: pairing must be <= 0"
            )
        if nsig and all(v == 0 for v in div.rho):
            raise SkeletonInvariantError(
                "boundary-rho-nonzero", f"{div.name}: rho vanishes on sigma"
            )
    for color in sk.colors:
        m = color_multiplicity(sk, color)
        if m < 1:
            raise SkeletonInvariantError(
                "multiplicity-positive", f"{color.name}: m_D = {m} < 1"
            )


def coroot_color(
    sk_rs: RootSystem,
    sigma: Sequence[tuple[int, ...]],
    name: str,
    index: int,
    scale: Fraction | int = 1,
    moved_by: Iterable[int] | None = None,
) -> Color:
    """Color whose functional is scale * alpha_index^vee restricted to sigma."""
    scale = Fraction(scale)
    rho = tuple(scale * rootsys.coroot_pairing(sk_rs, index, g) for g in sigma)
    moved = tuple(moved_by) if moved_by is not None else (index,)
    return Color(name=name, rho=rho, moved_by=moved, coroot=(index, scale))


def pairing_matrix(sk: SphericalSkeleton) -> list[list[Fraction]]:
    """A[D][gamma] = -<rho(D), gamma> over D = colors then boundary."""
    rows = [[-Fraction(v) for v in color.rho] for color in sk.colors]
    rows += [[-Fraction(v) for v in div.rho] for div in sk.boundary]
    return rows


def _doubled(vector: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(2 * v for v in vector)


def color_multiplicity(sk: SphericalSkeleton, color: Color) -> Fraction:
    """Anticanonical multiplicity m_D of a color.

    1 when some moving simple root lies in Sigma or (1/2)Sigma, otherwise
    <alpha^vee, 2rho_S - 2rho_{S^p}> for the moving root alpha (several
    movers must agree, which is asserted).
    """
    rs = sk.root_system
    sigma_set = set(sk.sigma)
    for idx in color.moved_by:
        alpha = tuple(1 if j == idx else 0 for j in range(rs.rank))
        if alpha in sigma_set or _doubled(alpha) in sigma_set:
            return _ONE
    full = two_rho_difference(sk)
    values = {
        Fraction(rootsys.coroot_pairing(rs, idx, full)) for idx in color.moved_by
    }
    if len(values) != 1:
        raise SkeletonInvariantError(
            "multiplicity-well-defined",
            f"{color.name}: movers disagree on m_D ({sorted(values)})",
        )
    return values.pop()


def two_rho_difference(sk: SphericalSkeleton) -> tuple[int, ...]:
    """2rho_S - 2rho_{S^p} in root-lattice coordinates."""
    rs = sk.root_system
    total = rootsys.two_rho(rs, range(rs.rank))
    inside = rootsys.two_rho(rs, sk.sp)
    return tuple(t - i for t, i in zip(total, inside))


def multiplicities(sk: SphericalSkeleton) -> tuple[Fraction, ...]:
    """m_D over D = colors then boundary (boundary divisors get 1)."""
    ms = tuple(color_multiplicity(sk, color) for color in sk.colors)
    return ms + (_ONE,) * len(sk.boundary)


def support(sk: SphericalSkeleton) -> frozenset[int]:
    """Indices of the spherical roots hit by some boundary divisor."""
    out = set()
    for div in sk.boundary:
        for j, v in enumerate(div.rho):
            if v < 0:
                out.add(j)
    return frozenset(out)


def is_complete(sk: SphericalSkeleton) -> bool:
    """Whether the rho(D) positively span the dual of span(Sigma).

    Exact test: the functionals span linearly, and some lam_D >= 1 combines
    them to zero (equivalent to the cone being the whole space).
    """
    nsig = len(sk.sigma)
    if nsig == 0:
        return True
    rows = [list(color.rho) for color in sk.colors]
    rows += [[Fraction(v) for v in div.rho] for div in sk.boundary]
    if not rows or exactlp.matrix_rank(rows) != nsig:
        return False
    aeq = [[rows[d][g] for d in range(len(rows))] for g in range(nsig)]
    return exactlp.feasible_with_lower_bounds(aeq, _ONE) is not None


def is_elementary(sk: SphericalSkeleton) -> bool:
    for div in sk.boundary:
        if any(v not in (0, -1) for v in div.rho):
            return False
        if sum(1 for v in div.rho if v == -1) > 1:
            return False
    return True


def is_reduced(sk: SphericalSkeleton) -> bool:
    if not is_elementary(sk):
        return False
    for j in range(len(sk.sigma)):
        if sum(1 for div in sk.boundary if div.rho[j] == -1) > 1:
            return False
    return True


def _unit_boundary(nsig: int, j: int, name: str) -> BoundaryDivisor:
    return BoundaryDivisor(name=name, rho=tuple(-1 if t == j else 0 for t in range(nsig)))


def to_elementary(sk: SphericalSkeleton) -> SphericalSkeleton:
    """Split Gamma into unit divisors, one per unit of -<rho(D), gamma>."""
    nsig = len(sk.sigma)
    gamma = []
    for j in range(nsig):
        total = -sum(div.rho[j] for div in sk.boundary)
        for t in range(total):
            gamma.append(_unit_boundary(nsig, j, f"E{j + 1}.{t + 1}"))
    return replace(sk, boundary=tuple(gamma))


def to_reduced(sk: SphericalSkeleton) -> SphericalSkeleton:
    """Keep one unit divisor per supported spherical root (elementary input)."""
    if not is_elementary(sk):
        raise ValueError("to_reduced requires an elementary skeleton")
    nsig = len(sk.sigma)
    gamma = [
        _unit_boundary(nsig, j, f"E{j + 1}")
        for j in range(nsig)
        if any(div.rho[j] == -1 for div in sk.boundary)
    ]
    return replace(sk, boundary=tuple(gamma))


def with_boundary_support(
    sk: SphericalSkeleton, indices: Iterable[int], combined: bool = False
) -> SphericalSkeleton:
    """Reduced elementary Gamma over the given support (or one combined divisor)."""
    idx = sorted(set(indices))
    nsig = len(sk.sigma)
    if combined:
        rho = tuple(-1 if j in idx else 0 for j in range(nsig))
        gamma: tuple[BoundaryDivisor, ...] = (BoundaryDivisor(name="E", rho=rho),)
    else:
        gamma = tuple(_unit_boundary(nsig, j, f"E{j + 1}") for j in idx)
    return replace(sk, boundary=gamma)


def product(sk1: SphericalSkeleton, sk2: SphericalSkeleton) -> SphericalSkeleton:
    """Direct product: block-diagonal root systems, pairings and Gamma."""
    rs = rootsys.build_root_system(sk1.root_system.components + sk2.root_system.components)
    r1 = sk1.root_system.rank
    n1, n2 = len(sk1.sigma), len(sk2.sigma)
    pad1 = (0,) * sk2.root_system.rank
    sigma = tuple(g + pad1 for g in sk1.sigma) + tuple(
        (0,) * r1 + g for g in sk2.sigma
    )
    sp = frozenset(sk1.sp) | frozenset(r1 + j for j in sk2.sp)
    used = {c.name for c in sk1.colors} | {d.name for d in sk1.boundary}

    def rename(name: str) -> str:
        while name in used:
            name += "'"
        used.add(name)
        return name

    colors = [
        replace(c, rho=tuple(c.rho) + (_ZERO,) * n2) for c in sk1.colors
    ]
    for c in sk2.colors:
        coroot = (c.coroot[0] + r1, c.coroot[1]) if c.coroot else None
        colors.append(
            Color(
                name=rename(c.name),
                rho=(_ZERO,) * n1 + tuple(c.rho),
                moved_by=tuple(r1 + j for j in c.moved_by),
                coroot=coroot,
            )
        )
    boundary = [replace(d, rho=tuple(d.rho) + (0,) * n2) for d in sk1.boundary]
    boundary += [
        BoundaryDivisor(name=rename(d.name), rho=(0,) * n1 + tuple(d.rho))
        for d in sk2.boundary
    ]
    return SphericalSkeleton(
        root_system=rs,
        sp=sp,
        sigma=sigma,
        colors=tuple(colors),
        boundary=tuple(boundary),
    )


def duplicate_boundary(sk: SphericalSkeleton, name: str) -> SphericalSkeleton:
    """Gamma gains one copy of the named boundary divisor."""
    for div in sk.boundary:
        if div.name == name:
            copy = BoundaryDivisor(name=f"{name}*", rho=div.rho)
            return replace(sk, boundary=sk.boundary + (copy,))
    raise ValueError(f"no boundary divisor named {name!r}")


def check_distinguished_certificate(
    sk: SphericalSkeleton,
    delta_prime: Iterable[str],
    sigma_prime: Iterable[int],
    c: Sequence[Fraction | int],
) -> bool:
    """Validate a distinguished-subset certificate (Delta', Sigma', c).

    True iff sum c_D rho(D) over Delta' is >= 0 on every spherical root and
    strictly positive exactly on Sigma'.  A valid certificate implies every
    reduced elementary skeleton with support inside Sigma' is not complete,
    which callers cross-check against is_complete.
    """
    names = list(delta_prime)
    weights = [Fraction(x) for x in c]
    if len(weights) != len(names):
        raise ValueError("one weight per color required")
    if any(w <= 0 for w in weights):
        raise ValueError("certificate weights must be strictly positive")
    by_name = {color.name: color for color in sk.colors}
    try:
        chosen = [by_name[name] for name in names]
    except KeyError as exc:
        raise ValueError(f"unknown color {exc.args[0]!r}") from exc
    strict = frozenset(sigma_prime)
    for j in range(len(sk.sigma)):
        total = sum(w * color.rho[j] for w, color in zip(weights, chosen))
        if total < 0:
            return False
        if (total > 0) != (j in strict):
            return False
    return True


def find_certificate_multipliers(
    sk: SphericalSkeleton, delta_prime: Iterable[str], sigma_prime: Iterable[int]
) -> tuple[Fraction, ...] | None:
    """Search c_D >= 1 making (Delta', Sigma') a valid certificate.

    Solves the feasibility LP: sum c_D rho(D) = 0 off Sigma', >= 1 on it.
    """
    names = list(delta_prime)
    by_name = {color.name: color for color in sk.colors}
    chosen = [by_name[name] for name in names]
    strict = frozenset(sigma_prime)
    k = len(chosen)
    if k == 0:
        return () if not strict else None
    # substitute c = 1 + u, u >= 0
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for j in range(len(sk.sigma)):
        coeffs = [Fraction(color.rho[j]) for color in chosen]
        base = sum(coeffs)
        if j in strict:
            # sum >= 1  <=>  -coeffs . u <= base - 1
            rows.append([-x for x in coeffs])
            rhs.append(base - 1)
        else:
            rows.append(list(coeffs))
            rhs.append(-base)
            rows.append([-x for x in coeffs])
            rhs.append(base)
    try:
        sol = exactlp.solve_max(exactlp.LpProblem.make(rows, rhs, [_ZERO] * k))
    except exactlp.LpInfeasibleError:
        return None
    c = tuple(u + 1 for u in sol.primal)
    return c if check_distinguished_certificate(sk, names, strict, c) else None


# ---------------------------------------------------------------------------
# skeleton file format (JSON; rationals as reduced fraction strings)


class SkeletonParseError(ValueError):
    """Malformed skeleton file."""


def _frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_frac(text, where: str) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise SkeletonParseError(f"{where}: bad rational {text!r}") from exc


def to_dict(sk: SphericalSkeleton) -> dict:
    data = {
        "root_system": [
            {"series": series, "rank": rank} for series, rank in sk.root_system.components
        ],
        "sp": sorted(sk.sp),
        "sigma": [list(g) for g in sk.sigma],
        "colors": [
            {
                "name": c.name,
                "rho": [_frac_to_str(v) for v in c.rho],
                "moved_by": list(c.moved_by),
                **(
                    {"coroot": {"index": c.coroot[0], "scale": _frac_to_str(c.coroot[1])}}
                    if c.coroot
                    else {}
                ),
            }
            for c in sk.colors
        ],
        "boundary": [{"name": d.name, "rho": list(d.rho)} for d in sk.boundary],
    }
    return data


def from_dict(data: dict) -> SphericalSkeleton:
    if not isinstance(data, dict):
        raise SkeletonParseError("top level must be an object")
    try:
        spec = [(comp["series"], int(comp["rank"])) for comp in data["root_system"]]
    except (KeyError, TypeError) as exc:
        raise SkeletonParseError(f"root_system: {exc}") from exc
    try:
        rs = rootsys.build_root_system(spec)
    except rootsys.RootSystemError as exc:
        raise SkeletonParseError(f"root_system: {exc}") from exc
    try:
        sigma = tuple(tuple(int(x) for x in g) for g in data.get("sigma", []))
        sp = frozenset(int(i) for i in data.get("sp", []))
        colors = []
        for c in data.get("colors", []):
            coroot = None
            if "coroot" in c:
                coroot = (
                    int(c["coroot"]["index"]),
                    _parse_frac(c["coroot"].get("scale", "1"), f"color {c.get('name')}"),
                )
            colors.append(
                Color(
                    name=str(c["name"]),
                    rho=tuple(
                        _parse_frac(v, f"color {c.get('name')}") for v in c["rho"]
                    ),
                    moved_by=tuple(int(i) for i in c["moved_by"]),
                    coroot=coroot,
                )
            )
        boundary = tuple(
            BoundaryDivisor(name=str(d["name"]), rho=tuple(int(x) for x in d["rho"]))
            for d in data.get("boundary", [])
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SkeletonParseError):
            raise
        raise SkeletonParseError(str(exc)) from exc
    return SphericalSkeleton(
        root_system=rs, sp=sp, sigma=sigma, colors=tuple(colors), boundary=boundary
    )


def save(sk: SphericalSkeleton, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(to_dict(sk), handle, indent=2)
        handle.write("\n")


def load(path: str) -> SphericalSkeleton:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SkeletonParseError(f"invalid JSON: {exc}") from exc
    return from_dict(data)
