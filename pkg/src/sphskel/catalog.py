"""Parametrized generators for the non-symmetric case families 31-50.

Each family builds the bare spherical system (empty Gamma), the boundary
support options the case analysis computes (with the expected invariant
value, relation and maximizer where one is stated), and the
distinguished-subset data (Delta', Sigma') used to rule out non-complete
supports.  Data entry follows the printed tables; the few readings that
had to be corrected are flagged per entry in ``typo_fixes`` and asserted
by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from sphskel import skeleton as sk_mod
from sphskel.mukai import EQUAL, STRICTLY_LESS
from sphskel.rootsys import build_root_system
from sphskel.skeleton import Color, SphericalSkeleton, coroot_color

F = Fraction


@dataclass(frozen=True)
class SupportOption:
    """One boundary-support choice of a case, with its expected outcome."""

    key: str
    indices: tuple[int, ...]
    expected_p: Fraction | None
    expected_relation: str
    expected_theta: tuple[Fraction, ...] | None = None
    combined: bool = False  # one divisor hitting all roots vs one per root
    minimal: bool = True  # belongs to the minimal-support list of the case
    equality_bullet: int | None = None


@dataclass(frozen=True)
class Certificate:
    delta_prime: tuple[str, ...]
    sigma_prime: tuple[int, ...]


@dataclass(frozen=True)
class CaseInstance:
    family: int
    sub_case: str
    params: tuple[tuple[str, int], ...]
    system: SphericalSkeleton  # Gamma is empty
    sigma_labels: tuple[str, ...]
    options: tuple[SupportOption, ...]
    certificates: tuple[Certificate, ...]
    expected_budget: int | None = None
    typo_fixes: tuple[str, ...] = ()

    def support_skeleton(self, option: SupportOption) -> SphericalSkeleton:
        return sk_mod.with_boundary_support(
            self.system, option.indices, combined=option.combined
        )

    def support_key(self, indices: Iterable[int], combined: bool = False) -> str:
        inner = ",".join(self.sigma_labels[j] for j in sorted(indices))
        return f"combined({inner})" if combined else inner

    def option(self, key: str) -> SupportOption:
        for opt in self.options:
            if opt.key == key:
                return opt
        raise KeyError(f"case {self.family}/{self.sub_case}: no support {key!r}")

    @property
    def label(self) -> str:
        sub = f"/{self.sub_case}" if self.sub_case else ""
        return f"{self.family}{sub}"


@dataclass(frozen=True)
class FamilySpec:
    family: int
    sub_case: str
    param_names: tuple[str, ...]  # free parameters of the builder
    validity: str
    is_valid: Callable[[dict], bool]
    default_sweep: Callable[[], list[dict]]
    build: Callable[[dict], CaseInstance]

    @property
    def key(self) -> tuple[int, str]:
        return (self.family, self.sub_case)


@dataclass(frozen=True)
class EqualityEntry:
    """One bullet of the equality classification, with its module tag.

    ``list_l`` is the number of the matching spherical-module skeleton in
    the standard List L of spherical-module data.
    """

    bullet: int
    family: int
    sub_case: str
    description: str
    list_l: str


EQUALITY_REGISTRY: tuple[EqualityEntry, ...] = (
    EqualityEntry(0, 31, "", "support {gamma_1} or {gamma_{2p-1}}", "24"),
    EqualityEntry(1, 32, "", "p = 2, support {gamma_1}", "38 (n=2)"),
    EqualityEntry(2, 34, "", "support {gamma_1}", "16"),
    EqualityEntry(3, 35, "", "support {gamma}", "15"),
    EqualityEntry(4, 36, "", "support {gamma_2}", "38 (n>2)"),
    EqualityEntry(5, 38, "", "any support of cardinality 2", "20"),
    EqualityEntry(6, 41, "", "support {gamma}", "18"),
    EqualityEntry(7, 42, "p=0", "support {gamma_2}", "10"),
    EqualityEntry(8, 43, "p=q=r=0", "any support of cardinality 2", "35"),
    EqualityEntry(
        9, 43, "p!=0,q=r=0", "support {gamma_1,gamma_4} or {gamma_2,gamma_4}", "40"
    ),
    EqualityEntry(10, 43, "p,q!=0,r=0", "support {gamma_3,gamma_5}", "42"),
    EqualityEntry(11, 46, "p=5", "support {alpha'_1} or {alpha'_3}", "13"),
    EqualityEntry(12, 49, "", "support {alpha'_1} or {alpha'_p}", "28"),
)


# ---------------------------------------------------------------------------
# small vector helpers


def _unit(rank: int, idx: int) -> tuple[int, ...]:
    return tuple(1 if j == idx else 0 for j in range(rank))


def _chain(rank: int, lo: int, hi: int) -> tuple[int, ...]:
    """alpha_lo + ... + alpha_hi over global 0-based indices, inclusive."""
    return tuple(1 if lo <= j <= hi else 0 for j in range(rank))


def _ctype(rank: int, lo: int, hi: int) -> tuple[int, ...]:
    """alpha_lo + 2 alpha_{lo+1} + ... + 2 alpha_{hi-1} + alpha_hi."""
    out = [0] * rank
    out[lo] = out[hi] = 1
    for j in range(lo + 1, hi):
        out[j] = 2
    return tuple(out)


def _explicit(
    name: str, nsig: int, values: dict[int, int], moved: tuple[int, ...]
) -> Color:
    rho = tuple(F(values.get(j, 0)) for j in range(nsig))
    return Color(name=name, rho=rho, moved_by=moved)


def _system(rs, sp, sigma, colors) -> SphericalSkeleton:
    return SphericalSkeleton(
        root_system=rs,
        sp=frozenset(sp),
        sigma=tuple(sigma),
        colors=tuple(colors),
        boundary=(),
    )


def _range_sweep(**ranges: Iterable[int]) -> Callable[[], list[dict]]:
    def sweep() -> list[dict]:
        out: list[dict] = [{}]
        for name, values in ranges.items():
            out = [{**d, name: v} for d in out for v in values]
        return out

    return sweep


# ---------------------------------------------------------------------------
# family builders


def _build_31(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("A", 2 * p)])
    n = rs.rank
    sigma = [_chain(n, i, i + 1) for i in range(0, 2 * p - 1)]
    labels = tuple(f"gamma_{i}" for i in range(1, 2 * p))
    colors = [coroot_color(rs, sigma, f"D{i + 1}", i) for i in range(2 * p)]
    system = _system(rs, (), sigma, colors)
    inst_params = (("p", p),)
    top = F(2 * p * p + p)
    options = []
    for k in range(1, p + 1):
        idx = 2 * k - 2
        key = labels[idx]
        if k in (1, p):
            theta = None
            if k == p:
                theta = tuple(
                    F((2 * p - j) * (2 * p - j + 1), 2) for j in range(1, 2 * p)
                )
            options.append(
                SupportOption(
                    key=key,
                    indices=(idx,),
                    expected_p=top,
                    expected_relation=EQUAL,
                    expected_theta=theta,
                    equality_bullet=0,
                )
            )
        else:
            if 2 * k <= p:
                exp = top - 2 * (k - 1) * (2 * p - 2 * k + 3)
            else:
                exp = top - 2 * (p - k) * (2 * k + 1)
            options.append(
                SupportOption(
                    key=key, indices=(idx,), expected_p=exp,
                    expected_relation=STRICTLY_LESS,
                )
            )
    options.append(
        SupportOption(
            key=f"{labels[0]},{labels[-1]}",
            indices=(0, 2 * p - 2),
            expected_p=F(2 * p),
            expected_relation=STRICTLY_LESS,
            minimal=False,
        )
    )
    cert = Certificate(
        delta_prime=tuple(f"D{i}" for i in range(2, 2 * p)),
        sigma_prime=tuple(2 * k - 1 for k in range(1, p)),
    )
    return CaseInstance(
        family=31,
        sub_case="",
        params=inst_params,
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=(cert,),
        expected_budget=2 * p * p + p,
    )


def _build_32(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("B", p)])
    sigma = [_chain(p, i, i + 1) for i in range(p - 1)] + [_unit(p, p - 1)]
    labels = tuple(f"gamma_{i}" for i in range(1, p + 1))
    colors = [coroot_color(rs, sigma, f"D{i + 1}", i) for i in range(p - 1)]
    colors.append(coroot_color(rs, sigma, "Dp+", p - 1, scale=F(1, 2)))
    colors.append(coroot_color(rs, sigma, "Dp-", p - 1, scale=F(1, 2)))
    system = _system(rs, (), sigma, colors)
    options = []
    for ell in range(1, p + 1, 2):
        if ell == 1:
            equal = p == 2
            options.append(
                SupportOption(
                    key=labels[0],
                    indices=(0,),
                    expected_p=F(3 * p - 2),
                    expected_relation=EQUAL if equal else STRICTLY_LESS,
                    expected_theta=(F(1), F(3)) if equal else None,
                    equality_bullet=1 if equal else None,
                )
            )
        else:
            options.append(
                SupportOption(
                    key=labels[ell - 1],
                    indices=(ell - 1,),
                    expected_p=None,
                    expected_relation=STRICTLY_LESS,
                )
            )
    cert = Certificate(
        delta_prime=tuple(f"D{i}" for i in range(2, p)) + ("Dp+",),
        sigma_prime=tuple(2 * k - 1 for k in range(1, p // 2 + 1)),
    )
    return CaseInstance(
        family=32,
        sub_case="",
        params=(("p", p),),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=(cert,),
        expected_budget=p * p,
    )


def _build_33(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("B", p)])
    sigma = [_chain(p, i, i + 1) for i in range(p - 1)]
    sigma.append(tuple(2 if j == p - 1 else 0 for j in range(p)))
    labels = tuple(f"gamma_{i}" for i in range(1, p + 1))
    colors = [coroot_color(rs, sigma, f"D{i + 1}", i) for i in range(p - 1)]
    colors.append(coroot_color(rs, sigma, f"D{p}", p - 1, scale=F(1, 2)))
    system = _system(rs, (), sigma, colors)
    options = [
        SupportOption(
            key=labels[0],
            indices=(0,),
            expected_p=F(p - 1),
            expected_relation=STRICTLY_LESS,
        )
    ]
    for ell in range(3, p + 1, 2):
        options.append(
            SupportOption(
                key=labels[ell - 1],
                indices=(ell - 1,),
                expected_p=None,
                expected_relation=STRICTLY_LESS,
            )
        )
    cert = Certificate(
        delta_prime=tuple(f"D{i}" for i in range(2, p + 1)),
        sigma_prime=tuple(2 * k - 1 for k in range(1, p // 2 + 1)),
    )
    return CaseInstance(
        family=33,
        sub_case="",
        params=(("p", p),),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=(cert,),
        expected_budget=p * p,
    )


def _build_34(params: dict) -> CaseInstance:
    rs = build_root_system([("B", 4)])
    sigma = [(1, 1, 1, 1), (0, 1, 2, 3)]
    colors = [
        coroot_color(rs, sigma, "D1", 0),
        coroot_color(rs, sigma, "D4", 3),
    ]
    system = _system(rs, (1, 2), sigma, colors)
    options = (
        SupportOption(
            key="gamma_1",
            indices=(0,),
            expected_p=F(13),
            expected_relation=EQUAL,
            expected_theta=(F(1), F(5)),
            equality_bullet=2,
        ),
    )
    return CaseInstance(
        family=34,
        sub_case="",
        params=(),
        system=system,
        sigma_labels=("gamma_1", "gamma_2"),
        options=options,
        certificates=(Certificate(("D4",), (1,)),),
        expected_budget=13,
    )


def _build_35(params: dict) -> CaseInstance:
    rs = build_root_system([("B", 3)])
    sigma = [(1, 2, 3)]
    colors = [coroot_color(rs, sigma, "D3", 2)]
    system = _system(rs, (0, 1), sigma, colors)
    options = (
        SupportOption(
            key="gamma",
            indices=(0,),
            expected_p=F(6),
            expected_relation=EQUAL,
            expected_theta=(F(1),),
            equality_bullet=3,
        ),
    )
    return CaseInstance(
        family=35,
        sub_case="",
        params=(),
        system=system,
        sigma_labels=("gamma",),
        options=options,
        certificates=(),
        expected_budget=6,
    )


def _build_36(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("C", p + 1)])
    sigma = [_unit(p + 1, 0), _ctype(p + 1, 0, p)]
    labels = ("gamma_1", "gamma_2")
    colors = [
        coroot_color(rs, sigma, "D1+", 0, scale=F(1, 2)),
        coroot_color(rs, sigma, "D1-", 0, scale=F(1, 2)),
        coroot_color(rs, sigma, "D2", 1),
    ]
    system = _system(rs, range(2, p + 1), sigma, colors)
    options = (
        SupportOption(
            key="gamma_2",
            indices=(1,),
            expected_p=F(4 * p),
            expected_relation=EQUAL,
            expected_theta=(F(2 * p + 1), F(1)),
            equality_bullet=4,
        ),
    )
    return CaseInstance(
        family=36,
        sub_case="",
        params=(("p", p),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D1+", "D1-"), (0,)),),
        expected_budget=4 * p,
    )


def _build_37(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("C", p + 1)])
    sigma = [tuple(2 if j == 0 else 0 for j in range(p + 1)), _ctype(p + 1, 0, p)]
    colors = [
        coroot_color(rs, sigma, "D1", 0, scale=F(1, 2)),
        coroot_color(rs, sigma, "D2", 1),
    ]
    system = _system(rs, range(2, p + 1), sigma, colors)
    options = (
        SupportOption(
            key="gamma_2",
            indices=(1,),
            expected_p=F(2 * p - 1),
            expected_relation=STRICTLY_LESS,
        ),
    )
    return CaseInstance(
        family=37,
        sub_case="",
        params=(("p", p),),
        system=system,
        sigma_labels=("gamma_1", "gamma_2"),
        options=options,
        certificates=(Certificate(("D1",), (0,)),),
        typo_fixes=(
            "printed value 2p is inconsistent with the stated multiplicity rule "
            "(m_D = 1 for the color of a doubled simple root); the engine asserts 2p-1",
        ),
    )


def _build_38(params: dict) -> CaseInstance:
    rs = build_root_system([("D", 4)])
    sigma = [(1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1)]
    labels = ("gamma_1", "gamma_2", "gamma_3")
    colors = [
        coroot_color(rs, sigma, "D1", 0),
        coroot_color(rs, sigma, "D3", 2),
        coroot_color(rs, sigma, "D4", 3),
    ]
    system = _system(rs, (1,), sigma, colors)
    options = []
    for pair, bullet_theta in (((0, 1), (F(1), F(1), F(5))), ((0, 2), None), ((1, 2), None)):
        options.append(
            SupportOption(
                key=",".join(labels[j] for j in pair),
                indices=pair,
                expected_p=F(11),
                expected_relation=EQUAL,
                expected_theta=bullet_theta,
                equality_bullet=5,
            )
        )
    options.append(
        SupportOption(
            key="gamma_1,gamma_2,gamma_3",
            indices=(0, 1, 2),
            expected_p=F(6),
            expected_relation=STRICTLY_LESS,
            minimal=False,
        )
    )
    options.append(
        SupportOption(
            key="combined(gamma_1,gamma_2)",
            indices=(0, 1),
            expected_p=F(10),
            expected_relation=STRICTLY_LESS,
            combined=True,
            minimal=False,
        )
    )
    certs = (
        Certificate(("D3", "D4"), (2,)),
        Certificate(("D1", "D4"), (1,)),
        Certificate(("D1", "D3"), (0,)),
    )
    return CaseInstance(
        family=38,
        sub_case="",
        params=(),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=certs,
        expected_budget=11,
    )


def _build_39(params: dict) -> CaseInstance:
    rs = build_root_system([("D", 5)])
    sigma = [
        (1, 0, 0, 0, 0),
        (0, 1, 1, 1, 0),
        (0, 1, 1, 0, 1),
        (0, 0, 1, 1, 1),
    ]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4")
    colors = [
        _explicit("D1+", 4, {0: 1, 1: -1}, (0,)),
        _explicit("D1-", 4, {0: 1, 2: -1}, (0,)),
        coroot_color(rs, sigma, "D2", 1),
        coroot_color(rs, sigma, "D4", 3),
        coroot_color(rs, sigma, "D5", 4),
    ]
    system = _system(rs, (2,), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 12), (1, 18), (2, 18))
    )
    return CaseInstance(
        family=39,
        sub_case="",
        params=(),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D4", "D5"), (3,)),),
        expected_budget=19,
    )


def _build_41(params: dict) -> CaseInstance:
    rs = build_root_system([("G", 2)])
    sigma = [(4, 2)]
    colors = [coroot_color(rs, sigma, "D1", 0)]
    system = _system(rs, (1,), sigma, colors)
    options = (
        SupportOption(
            key="gamma",
            indices=(0,),
            expected_p=F(5),
            expected_relation=EQUAL,
            expected_theta=(F(1),),
            equality_bullet=6,
        ),
    )
    return CaseInstance(
        family=41,
        sub_case="",
        params=(),
        system=system,
        sigma_labels=("gamma",),
        options=options,
        certificates=(),
        expected_budget=5,
    )


def _build_42_p0(params: dict) -> CaseInstance:
    q = params["q"]
    rs = build_root_system([("A", 1), ("C", q + 1)])
    n = rs.rank
    sigma = [
        tuple(1 if j in (0, 1) else 0 for j in range(n)),
        _ctype(n, 1, q + 1),
    ]
    colors = [
        coroot_color(rs, sigma, "D'1", 1, moved_by=(0, 1)),
        coroot_color(rs, sigma, "D'2", 2),
    ]
    system = _system(rs, range(3, q + 2), sigma, colors)
    options = (
        SupportOption(
            key="gamma_2",
            indices=(1,),
            expected_p=F(4 * q + 1),
            expected_relation=EQUAL,
            expected_theta=(F(2 * q + 1), F(1)),
            equality_bullet=7,
        ),
    )
    return CaseInstance(
        family=42,
        sub_case="p=0",
        params=(("p", 0), ("q", q)),
        system=system,
        sigma_labels=("gamma_1", "gamma_2"),
        options=options,
        certificates=(Certificate(("D'1",), (0,)),),
        expected_budget=4 * q + 1,
    )


def _build_42_p1(params: dict) -> CaseInstance:
    p, q = params["p"], params["q"]
    rs = build_root_system([("C", p + 1), ("C", q + 1)])
    n = rs.rank
    off = p + 1
    sigma = [
        tuple(1 if j in (0, off) else 0 for j in range(n)),
        _ctype(n, 0, p),
        _ctype(n, off, off + q),
    ]
    colors = [
        coroot_color(rs, sigma, "D1", 0, moved_by=(0, off)),
        coroot_color(rs, sigma, "D2", 1),
        coroot_color(rs, sigma, "D'2", off + 1),
    ]
    sp = list(range(2, p + 1)) + list(range(off + 2, off + q + 1))
    system = _system(rs, sp, sigma, colors)
    options = (
        SupportOption(
            key="gamma_2,gamma_3",
            indices=(1, 2),
            expected_p=F(2 * p + 2 * q - 1),
            expected_relation=STRICTLY_LESS,
        ),
    )
    certs = (
        Certificate(("D1", "D2"), (0, 1)),
        Certificate(("D1", "D'2"), (0, 2)),
    )
    return CaseInstance(
        family=42,
        sub_case="p>=1",
        params=(("p", p), ("q", q)),
        system=system,
        sigma_labels=("gamma_1", "gamma_2", "gamma_3"),
        options=options,
        certificates=certs,
        typo_fixes=(
            "printed value 2(p+q-1) implies m_D = 1 for the color of the joined "
            "root gamma_1, but the p=0 sub-case (an equality case) forces m_D = 2; "
            "the engine asserts 2p+2q-1",
        ),
    )


def _build_43_a(params: dict) -> CaseInstance:
    rs = build_root_system([("A", 1), ("A", 1), ("A", 1)])
    sigma = [_unit(3, 0), _unit(3, 1), _unit(3, 2)]
    labels = ("alpha_1", "alpha'_1", "alpha''_1")
    colors = [
        _explicit("D", 3, {0: 1, 1: 1, 2: -1}, (0, 1)),
        _explicit("D'", 3, {0: 1, 1: -1, 2: 1}, (0, 2)),
        _explicit("D''", 3, {0: -1, 1: 1, 2: 1}, (1, 2)),
    ]
    system = _system(rs, (), sigma, colors)
    options = []
    for pair, theta in (((0, 1), (F(1), F(1), F(3))), ((0, 2), None), ((1, 2), None)):
        options.append(
            SupportOption(
                key=",".join(labels[j] for j in pair),
                indices=pair,
                expected_p=F(3),
                expected_relation=EQUAL,
                expected_theta=theta,
                equality_bullet=8,
            )
        )
    options.append(
        SupportOption(
            key=",".join(labels),
            indices=(0, 1, 2),
            expected_p=F(0),
            expected_relation=STRICTLY_LESS,
            minimal=False,
        )
    )
    options.append(
        SupportOption(
            key=f"combined({labels[0]},{labels[1]})",
            indices=(0, 1),
            expected_p=F(2),
            expected_relation=STRICTLY_LESS,
            combined=True,
            minimal=False,
        )
    )
    certs = (
        Certificate(("D'", "D''"), (2,)),
        Certificate(("D", "D''"), (1,)),
        Certificate(("D", "D'"), (0,)),
    )
    return CaseInstance(
        family=43,
        sub_case="p=q=r=0",
        params=(("p", 0), ("q", 0), ("r", 0)),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=certs,
        expected_budget=3,
    )


def _build_43_b(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("A", 1), ("A", 1), ("C", p + 1)])
    n = rs.rank
    sigma = [_unit(n, 0), _unit(n, 1), _unit(n, 2), _ctype(n, 2, p + 2)]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4")
    colors = [
        _explicit("D", 4, {0: 1, 1: 1, 2: -1}, (0, 1)),
        _explicit("D'", 4, {0: 1, 1: -1, 2: 1}, (0, 2)),
        _explicit("D''", 4, {0: -1, 1: 1, 2: 1}, (1, 2)),
        coroot_color(rs, sigma, "D''2", 3),
    ]
    system = _system(rs, range(4, p + 3), sigma, colors)
    options = [
        SupportOption(
            key="gamma_1,gamma_4",
            indices=(0, 3),
            expected_p=F(4 * p + 2),
            expected_relation=EQUAL,
            expected_theta=(F(1), F(2 * p + 3), F(2 * p + 1), F(1)),
            equality_bullet=9,
        ),
        SupportOption(
            key="gamma_2,gamma_4",
            indices=(1, 3),
            expected_p=F(4 * p + 2),
            expected_relation=EQUAL,
            equality_bullet=9,
        ),
        SupportOption(
            key="gamma_1,gamma_2,gamma_4",
            indices=(0, 1, 3),
            expected_p=F(2 * p - 1),
            expected_relation=STRICTLY_LESS,
            minimal=False,
        ),
        SupportOption(
            key="combined(gamma_1,gamma_4)",
            indices=(0, 3),
            expected_p=F(4 * p + 1),
            expected_relation=STRICTLY_LESS,
            combined=True,
            minimal=False,
        ),
    ]
    certs = (
        Certificate(("D'", "D''", "D''2"), (2, 3)),
        Certificate(("D", "D'", "D''"), (0, 1, 2)),
    )
    return CaseInstance(
        family=43,
        sub_case="p!=0,q=r=0",
        params=(("p", p), ("q", 0), ("r", 0)),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=certs,
        expected_budget=4 * p + 2,
    )


def _build_43_c(params: dict) -> CaseInstance:
    p, q = params["p"], params["q"]
    rs = build_root_system([("A", 1), ("C", p + 1), ("C", q + 1)])
    n = rs.rank
    off2 = p + 2
    sigma = [
        _unit(n, 0),
        _unit(n, 1),
        _ctype(n, 1, p + 1),
        _unit(n, off2),
        _ctype(n, off2, off2 + q),
    ]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4", "gamma_5")
    colors = [
        _explicit("D", 5, {0: 1, 1: 1, 3: -1}, (0, 1)),
        _explicit("D'", 5, {0: 1, 1: -1, 3: 1}, (0, off2)),
        _explicit("D''", 5, {0: -1, 1: 1, 3: 1}, (1, off2)),
        coroot_color(rs, sigma, "D'2", 2),
        coroot_color(rs, sigma, "D''2", off2 + 1),
    ]
    sp = list(range(3, p + 2)) + list(range(off2 + 2, off2 + q + 1))
    system = _system(rs, sp, sigma, colors)
    options = [
        SupportOption(
            key="gamma_3,gamma_5",
            indices=(2, 4),
            expected_p=F(4 * p + 4 * q + 1),
            expected_relation=EQUAL,
            expected_theta=(
                F(2 * p + 2 * q + 3),
                F(2 * p + 1),
                F(1),
                F(2 * q + 1),
                F(1),
            ),
            equality_bullet=10,
        ),
        SupportOption(
            key="combined(gamma_3,gamma_5)",
            indices=(2, 4),
            expected_p=F(4 * p + 4 * q),
            expected_relation=STRICTLY_LESS,
            combined=True,
            minimal=False,
        ),
    ]
    certs = (
        Certificate(("D", "D'", "D''", "D''2"), (0, 1, 3, 4)),
        Certificate(("D", "D'", "D''", "D'2"), (0, 1, 2, 3)),
    )
    return CaseInstance(
        family=43,
        sub_case="p,q!=0,r=0",
        params=(("p", p), ("q", q), ("r", 0)),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=certs,
        expected_budget=4 * p + 4 * q + 1,
    )


def _build_43_d(params: dict) -> CaseInstance:
    p, q, r = params["p"], params["q"], params["r"]
    rs = build_root_system([("C", p + 1), ("C", q + 1), ("C", r + 1)])
    n = rs.rank
    o1, o2 = p + 1, p + q + 2
    sigma = [
        _unit(n, 0),
        _ctype(n, 0, p),
        _unit(n, o1),
        _ctype(n, o1, o1 + q),
        _unit(n, o2),
        _ctype(n, o2, o2 + r),
    ]
    labels = tuple(f"gamma_{i}" for i in range(1, 7))
    colors = [
        _explicit("D", 6, {0: 1, 2: 1, 4: -1}, (0, o1)),
        _explicit("D'", 6, {0: 1, 2: -1, 4: 1}, (0, o2)),
        _explicit("D''", 6, {0: -1, 2: 1, 4: 1}, (o1, o2)),
        coroot_color(rs, sigma, "D2", 1),
        coroot_color(rs, sigma, "D'2", o1 + 1),
        coroot_color(rs, sigma, "D''2", o2 + 1),
    ]
    sp = (
        list(range(2, p + 1))
        + list(range(o1 + 2, o1 + q + 1))
        + list(range(o2 + 2, o2 + r + 1))
    )
    system = _system(rs, sp, sigma, colors)
    options = (
        SupportOption(
            key="gamma_2,gamma_4,gamma_6",
            indices=(1, 3, 5),
            expected_p=F(2 * (p + q + r) - 3),
            expected_relation=STRICTLY_LESS,
        ),
    )
    certs = (
        Certificate(("D", "D'", "D''", "D'2", "D''2"), (0, 2, 3, 4, 5)),
        Certificate(("D", "D'", "D''", "D2", "D''2"), (0, 1, 2, 4, 5)),
        Certificate(("D", "D'", "D''", "D2", "D'2"), (0, 1, 2, 3, 4)),
    )
    return CaseInstance(
        family=43,
        sub_case="p,q,r!=0",
        params=(("p", p), ("q", q), ("r", r)),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=certs,
    )


def _build_44_p2(params: dict) -> CaseInstance:
    rs = build_root_system([("A", 3), ("A", 1)])
    sigma = [_unit(4, j) for j in range(4)]
    labels = ("alpha_1", "alpha_2", "alpha_3", "alpha'_1")
    colors = [
        _explicit("D+", 4, {0: 1, 1: -1, 2: 1, 3: -1}, (0, 2)),
        _explicit("D2+", 4, {0: -1, 1: 1}, (1,)),
        _explicit("D2-", 4, {1: 1, 2: -1}, (1,)),
        _explicit("D'", 4, {0: 1, 2: -1, 3: 1}, (0, 3)),
        _explicit("D''", 4, {0: -1, 2: 1, 3: 1}, (2, 3)),
    ]
    system = _system(rs, (), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 6), (1, 4), (2, 6))
    )
    return CaseInstance(
        family=44,
        sub_case="p=2",
        params=(("p", 2),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D'", "D''"), (3,)),),
        expected_budget=7,
    )


def _build_44_p3(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("A", p + 1), ("A", 1)])
    n = rs.rank
    sigma = [_unit(n, 0), _chain(n, 1, p - 1), _unit(n, p), _unit(n, p + 1)]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4")
    colors = [
        _explicit("D+", 4, {0: 1, 1: -1, 2: 1, 3: -1}, (0, p)),
        _explicit("D2", 4, {0: -1, 1: 1}, (1,)),
        _explicit("Dp", 4, {1: 1, 2: -1}, (p - 1,)),
        _explicit("D'", 4, {0: 1, 2: -1, 3: 1}, (0, p + 1)),
        _explicit("D''", 4, {0: -1, 2: 1, 3: 1}, (p, p + 1)),
    ]
    system = _system(rs, range(2, p - 1), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 3 * p), (1, 4 * (p - 1)), (2, 3 * p))
    )
    return CaseInstance(
        family=44,
        sub_case="p>=3",
        params=(("p", p),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D'", "D''"), (3,)),),
        expected_budget=4 * p - 1,
    )


def _build_45_p1(params: dict) -> CaseInstance:
    q = params["q"]
    rs = build_root_system([("A", 2), ("C", q + 1)])
    n = rs.rank
    sigma = [_unit(n, 0), _unit(n, 1), _unit(n, 2), _ctype(n, 2, q + 2)]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4")
    colors = [
        _explicit("D1+", 4, {0: 1, 1: -1, 2: 1}, (0, 2)),
        _explicit("D1-", 4, {0: 1, 2: -1}, (0,)),
        _explicit("D2+", 4, {1: 1, 2: -1}, (1,)),
        _explicit("D2-", 4, {0: -1, 1: 1, 2: 1}, (1, 2)),
        coroot_color(rs, sigma, "D'", 3),
    ]
    system = _system(rs, range(4, q + 3), sigma, colors)
    options = tuple(
        SupportOption(
            key=f"{labels[j]},gamma_4",
            indices=(j, 3),
            expected_p=F(2 * q + 1),
            expected_relation=STRICTLY_LESS,
        )
        for j in (0, 1)
    )
    certs = (
        Certificate(("D1+", "D2-", "D'"), (2, 3)),
        Certificate(("D1+", "D1-", "D2+", "D2-"), (0, 1, 2)),
    )
    return CaseInstance(
        family=45,
        sub_case="p=1",
        params=(("p", 1), ("q", q)),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=certs,
    )


def _build_45_p2(params: dict) -> CaseInstance:
    q = params["q"]
    rs = build_root_system([("A", 3), ("C", q + 1)])
    n = rs.rank
    sigma = [_unit(n, 0), _unit(n, 1), _unit(n, 2), _unit(n, 3), _ctype(n, 3, q + 3)]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4", "gamma_5")
    colors = [
        _explicit("D1+", 5, {0: 1, 1: -1, 2: 1, 3: -1}, (0, 2)),
        _explicit("D1-", 5, {0: 1, 2: -1, 3: 1}, (0, 3)),
        _explicit("D2+", 5, {0: -1, 1: 1}, (1,)),
        _explicit("D2-", 5, {1: 1, 2: -1}, (1,)),
        _explicit("D3-", 5, {0: -1, 2: 1, 3: 1}, (2, 3)),
        coroot_color(rs, sigma, "D'", 4),
    ]
    system = _system(rs, range(5, q + 4), sigma, colors)
    options = tuple(
        SupportOption(
            key=f"{labels[j]},gamma_5",
            indices=(j, 4),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 2 * q + 2), (1, 2 * q - 1), (2, 2 * q + 2))
    )
    certs = (
        Certificate(("D1-", "D3-", "D'"), (3, 4)),
        Certificate(("D1+", "D1-", "D2+", "D2-", "D3-"), (0, 1, 2, 3)),
    )
    return CaseInstance(
        family=45,
        sub_case="p=2",
        params=(("p", 2), ("q", q)),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=certs,
        expected_budget=6 + 4 * q,
        typo_fixes=("gamma_3 printed as 'alpha_3' without the Greek letter; read alpha_3",),
    )


def _build_45_p3(params: dict) -> CaseInstance:
    p, q = params["p"], params["q"]
    rs = build_root_system([("A", p + 1), ("C", q + 1)])
    n = rs.rank
    off = p + 1
    sigma = [
        _unit(n, 0),
        _chain(n, 1, p - 1),
        _unit(n, p),
        _unit(n, off),
        _ctype(n, off, off + q),
    ]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4", "gamma_5")
    colors = [
        _explicit("D1+", 5, {0: 1, 1: -1, 2: 1, 3: -1}, (0, p)),
        _explicit("D1-", 5, {0: 1, 2: -1, 3: 1}, (0, off)),
        _explicit("D2", 5, {0: -1, 1: 1}, (1,)),
        _explicit("Dp", 5, {1: 1, 2: -1}, (p - 1,)),
        _explicit("Dp1-", 5, {0: -1, 2: 1, 3: 1}, (p, off)),
        coroot_color(rs, sigma, "D'", off + 1),
    ]
    sp = list(range(2, p - 1)) + list(range(off + 2, off + q + 1))
    system = _system(rs, sp, sigma, colors)
    options = tuple(
        SupportOption(
            key=f"{labels[j]},gamma_5",
            indices=(j, 4),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in (
            (0, 2 * (p + q - 1)),
            (1, 2 * p + 2 * q - 5),
            (2, 2 * (p + q - 1)),
        )
    )
    certs = (
        Certificate(("D1-", "Dp1-", "D'"), (3, 4)),
        Certificate(("D1+", "D1-", "D2", "Dp", "Dp1-"), (0, 1, 2, 3)),
    )
    return CaseInstance(
        family=45,
        sub_case="p>=3",
        params=(("p", p), ("q", q)),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=certs,
        expected_budget=4 * p + 4 * q - 2,
        typo_fixes=(
            "gamma_3 printed as 'alpha_{p+1}' without the Greek letter; read alpha_{p+1}",
        ),
    )


def _build_46_p4(params: dict) -> CaseInstance:
    rs = build_root_system([("B", 2), ("A", 1), ("A", 1)])
    sigma = [_unit(4, j) for j in range(4)]
    labels = ("alpha_1", "alpha_2", "alpha'_1", "alpha''_1")
    colors = [
        _explicit("D1+", 4, {0: 1, 1: -1, 2: 1, 3: 1}, (0, 2, 3)),
        _explicit("D1-", 4, {0: 1, 2: -1, 3: -1}, (0,)),
        _explicit("D2+", 4, {0: -1, 1: 1, 2: 1, 3: -1}, (1, 2)),
        _explicit("D2-", 4, {0: -1, 1: 1, 2: -1, 3: 1}, (1, 3)),
    ]
    system = _system(rs, (), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 3), (1, 0))
    )
    return CaseInstance(
        family=46,
        sub_case="p=4",
        params=(("p", 4),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D1+", "D2+", "D2-"), (2, 3)),),
        expected_budget=6,
    )


def _build_46_p5(params: dict) -> CaseInstance:
    rs = build_root_system([("B", 2), ("A", 3)])
    sigma = [_unit(5, j) for j in range(5)]
    labels = ("alpha_1", "alpha_2", "alpha'_1", "alpha'_2", "alpha'_3")
    colors = [
        _explicit("D1+", 5, {0: 1, 1: -1, 2: 1, 3: -1, 4: 1}, (0, 2, 4)),
        _explicit("D1-", 5, {0: 1, 2: -1, 3: 1, 4: -1}, (0, 3)),
        _explicit("D2+", 5, {0: -1, 1: 1, 2: 1, 4: -1}, (1, 2)),
        _explicit("D2-", 5, {0: -1, 1: 1, 2: -1, 4: 1}, (1, 4)),
        _explicit("D'2+", 5, {0: -1, 3: 1}, (3,)),
    ]
    system = _system(rs, (), sigma, colors)
    options = (
        SupportOption(
            key="alpha'_1",
            indices=(2,),
            expected_p=F(10),
            expected_relation=EQUAL,
            expected_theta=(F(5), F(12), F(1), F(4), F(9)),
            equality_bullet=11,
        ),
        SupportOption(
            key="alpha'_2",
            indices=(3,),
            expected_p=F(4),
            expected_relation=STRICTLY_LESS,
        ),
        SupportOption(
            key="alpha'_3",
            indices=(4,),
            expected_p=F(10),
            expected_relation=EQUAL,
            equality_bullet=11,
        ),
        SupportOption(
            key="alpha'_1,alpha'_3",
            indices=(2, 4),
            expected_p=F(1),
            expected_relation=STRICTLY_LESS,
            minimal=False,
        ),
    )
    return CaseInstance(
        family=46,
        sub_case="p=5",
        params=(("p", 5),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D1+", "D1-", "D2+", "D2-"), (0, 1)),),
        expected_budget=10,
    )


def _build_46_p6(params: dict) -> CaseInstance:
    rs = build_root_system([("B", 3), ("A", 3)])
    sigma = [_unit(6, j) for j in range(6)]
    labels = (
        "alpha_1",
        "alpha_2",
        "alpha_3",
        "alpha'_1",
        "alpha'_2",
        "alpha'_3",
    )
    colors = [
        _explicit("D1+", 6, {0: 1, 1: -1, 4: 1}, (0, 4)),
        _explicit("D1-", 6, {0: 1, 4: -1}, (0,)),
        _explicit("D2+", 6, {1: 1, 2: -1, 3: 1, 4: -1, 5: 1}, (1, 3, 5)),
        _explicit("D2-", 6, {0: -1, 1: 1, 3: -1, 4: 1, 5: -1}, (1, 4)),
        _explicit("D3+", 6, {1: -1, 2: 1, 3: 1, 5: -1}, (2, 3)),
        _explicit("D3-", 6, {1: -1, 2: 1, 3: -1, 5: 1}, (2, 5)),
    ]
    system = _system(rs, (), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 5), (1, 2), (2, 3))
    )
    return CaseInstance(
        family=46,
        sub_case="p=6",
        params=(("p", 6),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(
            Certificate(("D1+", "D2+", "D2-", "D3+", "D3-"), (3, 4, 5)),
        ),
        expected_budget=15,
        typo_fixes=(
            "Delta printed with five names but six functionals; D2- is included",
        ),
    )


def _build_47_p0(params: dict) -> CaseInstance:
    q = params["q"]
    rs = build_root_system([("B", 2), ("A", 1), ("C", q + 1)])
    n = rs.rank
    sigma = [_unit(n, 0), _unit(n, 1), _unit(n, 2), _unit(n, 3), _ctype(n, 3, q + 3)]
    labels = ("gamma_1", "gamma_2", "gamma_3", "gamma_4", "gamma_5")
    colors = [
        _explicit("D1+", 5, {0: 1, 1: -1, 2: 1, 3: 1}, (0, 2, 3)),
        _explicit("D1-", 5, {0: 1, 2: -1, 3: -1}, (0,)),
        _explicit("D2+", 5, {0: -1, 1: 1, 2: 1, 3: -1}, (1, 2)),
        _explicit("D2-", 5, {0: -1, 1: 1, 2: -1, 3: 1}, (1, 3)),
        coroot_color(rs, sigma, "D''", 4),
    ]
    system = _system(rs, range(5, q + 4), sigma, colors)
    options = tuple(
        SupportOption(
            key=f"{labels[j]},gamma_5",
            indices=(j, 4),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 2 * (q + 1)), (1, 2 * q - 1))
    )
    certs = (
        Certificate(("D1+", "D2+", "D2-", "D''"), (2, 3, 4)),
        Certificate(("D1+", "D1-", "D2+", "D2-"), (0, 1, 2, 3)),
    )
    return CaseInstance(
        family=47,
        sub_case="p=0",
        params=(("p", 0), ("q", q)),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=certs,
        expected_budget=4 * q + 5,
    )


def _build_47_p1(params: dict) -> CaseInstance:
    p, q = params["p"], params["q"]
    rs = build_root_system([("B", 2), ("C", p + 1), ("C", q + 1)])
    n = rs.rank
    o1, o2 = 2, p + 3
    sigma = [
        _unit(n, 0),
        _unit(n, 1),
        _unit(n, o1),
        _ctype(n, o1, o1 + p),
        _unit(n, o2),
        _ctype(n, o2, o2 + q),
    ]
    labels = tuple(f"gamma_{i}" for i in range(1, 7))
    colors = [
        _explicit("D1+", 6, {0: 1, 1: -1, 2: 1, 4: 1}, (0, o1, o2)),
        _explicit("D1-", 6, {0: 1, 2: -1, 4: -1}, (0,)),
        _explicit("D2+", 6, {0: -1, 1: 1, 2: 1, 4: -1}, (1, o1)),
        _explicit("D2-", 6, {0: -1, 1: 1, 2: -1, 4: 1}, (1, o2)),
        coroot_color(rs, sigma, "D'", o1 + 1),
        coroot_color(rs, sigma, "D''", o2 + 1),
    ]
    sp = list(range(o1 + 2, o1 + p + 1)) + list(range(o2 + 2, o2 + q + 1))
    system = _system(rs, sp, sigma, colors)
    options = tuple(
        SupportOption(
            key=f"{labels[j]},gamma_4,gamma_6",
            indices=(j, 3, 5),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((0, 2 * p + 2 * q - 1), (1, 2 * (p + q - 1)))
    )
    certs = (
        Certificate(("D1+", "D2+", "D2-", "D'", "D''"), (2, 3, 4, 5)),
        Certificate(("D1+", "D1-", "D2+", "D2-", "D''"), (0, 1, 2, 4, 5)),
        Certificate(("D1+", "D1-", "D2+", "D2-", "D'"), (0, 1, 2, 3, 4)),
    )
    return CaseInstance(
        family=47,
        sub_case="p>=1",
        params=(("p", p), ("q", q)),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=certs,
        expected_budget=4 * (p + q + 1),
    )


def _build_48_p1(params: dict) -> CaseInstance:
    rs = build_root_system([("B", 2), ("C", 3)])
    sigma = [_unit(5, j) for j in range(5)]
    labels = ("alpha_1", "alpha_2", "alpha'_1", "alpha'_2", "alpha'_3")
    colors = [
        _explicit("D1+", 5, {0: 1, 1: -1, 2: 1, 3: -1, 4: 1}, (0, 2, 4)),
        _explicit("D1-", 5, {0: 1, 2: -1, 3: 1, 4: -1}, (0, 3)),
        _explicit("D2+", 5, {0: -1, 1: 1, 2: 1, 4: -1}, (1, 2)),
        _explicit("D2-", 5, {0: -1, 1: 1, 2: -1, 4: 1}, (1, 4)),
        _explicit("D'2+", 5, {0: -1, 3: 1, 4: -1}, (3,)),
    ]
    system = _system(rs, (), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((2, 1), (3, 4), (4, 8))
    )
    return CaseInstance(
        family=48,
        sub_case="p=1",
        params=(("p", 1),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D1+", "D1-", "D2+", "D2-"), (0, 1)),),
        expected_budget=13,
    )


def _build_48_pge1(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("B", 2), ("C", p + 2)])
    n = rs.rank
    sigma = [
        _unit(n, 0),
        _unit(n, 1),
        _unit(n, 2),
        _unit(n, 3),
        _unit(n, 4),
        _ctype(n, 4, p + 3),
    ]
    labels = tuple(f"gamma_{i}" for i in range(1, 7))
    colors = [
        _explicit("D1+", 6, {0: 1, 1: -1, 2: 1, 3: -1, 4: 1}, (0, 2, 4)),
        _explicit("D1-", 6, {0: 1, 2: -1, 3: 1, 4: -1}, (0, 3)),
        _explicit("D2+", 6, {0: -1, 1: 1, 2: 1, 4: -1}, (1, 2)),
        _explicit("D2-", 6, {0: -1, 1: 1, 2: -1, 4: 1}, (1, 4)),
        _explicit("D'2+", 6, {0: -1, 3: 1, 5: -1}, (3,)),
        coroot_color(rs, sigma, "D'4", 5),
    ]
    system = _system(rs, range(6, p + 4), sigma, colors)
    options = tuple(
        SupportOption(
            key=labels[j],
            indices=(j,),
            expected_p=F(v),
            expected_relation=STRICTLY_LESS,
        )
        for j, v in ((2, 2 * p - 2), (3, 2 * p + 1), (4, 2 * p + 6), (5, 8 * p - 1))
    )
    return CaseInstance(
        family=48,
        sub_case="p>=1",
        params=(("p", p),),
        system=system,
        sigma_labels=labels,
        options=options,
        certificates=(Certificate(("D1+", "D1-", "D2+", "D2-"), (0, 1)),),
        expected_budget=8 * p + 4,
        typo_fixes=(
            "S^p printed as {alpha'_5..alpha'_{p+1}}; the budget 8p+4 forces "
            "{alpha'_5..alpha'_{p+2}}",
            "the printed header p>=1 degenerates at p=1 (gamma_6 collapses onto "
            "gamma_5); the sweep starts at p=2",
        ),
    )


def _build_49(params: dict) -> CaseInstance:
    p = params["p"]
    rs = build_root_system([("A", p - 1), ("A", p)])
    n = rs.rank  # 2p - 1
    sigma = [_unit(n, j) for j in range(n)]
    labels = tuple(f"alpha_{i}" for i in range(1, p)) + tuple(
        f"alpha'_{i}" for i in range(1, p + 1)
    )

    def unprimed(i: int) -> int | None:
        return i - 1 if 1 <= i <= p - 1 else None

    def primed(i: int) -> int | None:
        return p - 1 + i - 1 if 1 <= i <= p else None

    colors = []
    for i in range(1, p + 1):
        plus: dict[int, int] = {}
        for pos, val in (
            (unprimed(p - i), -1),
            (unprimed(p - i + 1), 1),
            (primed(i - 1), -1),
            (primed(i), 1),
        ):
            if pos is not None:
                plus[pos] = val
        moved = tuple(sorted(j for j, v in plus.items() if v == 1))
        colors.append(_explicit(f"D{i}+", n, plus, moved))
        minus: dict[int, int] = {}
        for pos, val in (
            (unprimed(p - i), 1),
            (unprimed(p - i + 1), -1),
            (primed(i), 1),
            (primed(i + 1), -1),
        ):
            if pos is not None:
                minus[pos] = val
        moved = tuple(sorted(j for j, v in minus.items() if v == 1))
        colors.append(_explicit(f"D{i}-", n, minus, moved))
    system = _system(rs, (), sigma, colors)
    options = []
    theta_last = tuple(F(i * (i + 1)) for i in range(1, p)) + tuple(
        F((p + 1 - j) ** 2) for j in range(1, p + 1)
    )
    for k in range(1, p + 1):
        idx = p - 1 + k - 1
        if k in (1, p):
            options.append(
                SupportOption(
                    key=labels[idx],
                    indices=(idx,),
                    expected_p=F(p * p),
                    expected_relation=EQUAL,
                    expected_theta=theta_last if k == p else None,
                    equality_bullet=12,
                )
            )
        else:
            if 2 * k <= p:
                exp = F(p * p - 2 * (k - 1) * (p - k + 2))
            else:
                exp = F(p * p - 2 * (p - k) * (k + 1))
            options.append(
                SupportOption(
                    key=labels[idx],
                    indices=(idx,),
                    expected_p=exp,
                    expected_relation=STRICTLY_LESS,
                )
            )
    options.append(
        SupportOption(
            key=f"alpha'_1,alpha'_{p}",
            indices=(p - 1, 2 * p - 2),
            expected_p=F(0),
            expected_relation=STRICTLY_LESS,
            minimal=False,
        )
    )
    cert_colors = tuple(
        name
        for i in range(1, p + 1)
        for name in (f"D{i}+", f"D{i}-")
        if name not in ("D1+", f"D{p}-")
    )
    return CaseInstance(
        family=49,
        sub_case="",
        params=(("p", p),),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=(Certificate(cert_colors, tuple(range(p - 1))),),
        expected_budget=p * p,
        typo_fixes=(
            "the printed maximizer indexes alpha'_{p+i-1}, which leaves the rank "
            "for i >= 2; the LP confirms the reading alpha'_{p+1-i}",
        ),
    )


def _build_50(params: dict, even: bool) -> CaseInstance:
    q = params["q"]
    p = 2 * q if even else 2 * q - 1
    nb = q if even else q - 1  # rank of the B component (the unprimed side)
    rs = build_root_system([("B", nb), ("D", q)])
    n = rs.rank

    def unprimed(i: int) -> int | None:
        return i - 1 if 1 <= i <= nb else None

    def primed(i: int) -> int | None:
        return nb + i - 1 if 1 <= i <= q else None

    sigma = [_unit(n, j) for j in range(n)]
    labels = tuple(f"alpha_{i}" for i in range(1, nb + 1)) + tuple(
        f"alpha'_{i}" for i in range(1, q + 1)
    )

    def color(name: str, entries) -> Color:
        values: dict[int, int] = {}
        for pos, val in entries:
            if pos is not None:
                values[pos] = val
        moved = tuple(sorted(j for j, v in values.items() if v == 1))
        return _explicit(name, n, values, moved)

    colors = []
    if even:
        for j in range(1, q - 1):
            colors.append(
                color(
                    f"D{2 * j - 1}",
                    [
                        (unprimed(j - 1), -1),
                        (unprimed(j), 1),
                        (primed(j - 1), 1),
                        (primed(j), -1),
                    ],
                )
            )
            colors.append(
                color(
                    f"D{2 * j}",
                    [
                        (unprimed(j), 1),
                        (unprimed(j + 1), -1),
                        (primed(j - 1), -1),
                        (primed(j), 1),
                    ],
                )
            )
        colors.append(
            color(
                f"D{p - 3}",
                [
                    (unprimed(q - 2), -1),
                    (unprimed(q - 1), 1),
                    (primed(q - 2), 1),
                    (primed(q - 1), -1),
                    (primed(q), -1),
                ],
            )
        )
        colors.append(
            color(
                f"D{p - 2}",
                [
                    (unprimed(q - 1), 1),
                    (unprimed(q), -1),
                    (primed(q - 2), -1),
                    (primed(q - 1), 1),
                    (primed(q), 1),
                ],
            )
        )
        colors.append(
            color(
                f"D{p - 1}",
                [
                    (unprimed(q - 1), -1),
                    (unprimed(q), 1),
                    (primed(q - 1), -1),
                    (primed(q), 1),
                ],
            )
        )
        colors.append(
            color(
                f"D{p}",
                [
                    (unprimed(q - 1), -1),
                    (unprimed(q), 1),
                    (primed(q - 1), 1),
                    (primed(q), -1),
                ],
            )
        )
    else:
        for j in range(1, q - 1):
            colors.append(
                color(
                    f"D{2 * j - 1}",
                    [
                        (unprimed(j - 1), 1),
                        (unprimed(j), -1),
                        (primed(j - 1), -1),
                        (primed(j), 1),
                    ],
                )
            )
        for j in range(1, q - 2):
            colors.append(
                color(
                    f"D{2 * j}",
                    [
                        (unprimed(j - 1), -1),
                        (unprimed(j), 1),
                        (primed(j), 1),
                        (primed(j + 1), -1),
                    ],
                )
            )
        colors.append(
            color(
                f"D{p - 3}",
                [
                    (unprimed(q - 3), -1),
                    (unprimed(q - 2), 1),
                    (primed(q - 2), 1),
                    (primed(q - 1), -1),
                    (primed(q), -1),
                ],
            )
        )
        colors.append(
            color(
                f"D{p - 2}",
                [
                    (unprimed(q - 2), 1),
                    (unprimed(q - 1), -1),
                    (primed(q - 2), -1),
                    (primed(q - 1), 1),
                    (primed(q), 1),
                ],
            )
        )
        colors.append(
            color(
                f"D{p - 1}",
                [
                    (unprimed(q - 2), -1),
                    (unprimed(q - 1), 1),
                    (primed(q - 1), 1),
                    (primed(q), -1),
                ],
            )
        )
        colors.append(
            color(
                f"D{p}",
                [
                    (unprimed(q - 2), -1),
                    (unprimed(q - 1), 1),
                    (primed(q - 1), -1),
                    (primed(q), 1),
                ],
            )
        )
    colors.sort(key=lambda c: int(c.name[1:]))
    system = _system(rs, (), sigma, colors)

    options = []
    if even:
        # supports on the unprimed (B) side
        def pos(k: int) -> int:
            return unprimed(k)

        side = range(1, q + 1)
    else:
        def pos(k: int) -> int:
            return primed(k)

        side = range(1, q + 1)
    for k in side:
        if k == 1:
            exp = F(p - 1)
        elif k <= q - 2:
            exp = F(p + (k - 1) ** 2 - 5)
        elif k == q - 1:
            exp = F(p * p - 4 * p - 4, 4) if even else F((p - 1) * (p - 3), 4)
        else:  # k == q
            exp = F(p * (p - 4), 4) if even else F((p - 1) * (p - 3), 4)
        options.append(
            SupportOption(
                key=labels[pos(k)],
                indices=(pos(k),),
                expected_p=exp,
                expected_relation=STRICTLY_LESS,
            )
        )
    sigma_prime = (
        tuple(primed(i) for i in range(1, q + 1))
        if even
        else tuple(unprimed(i) for i in range(1, nb + 1))
    )
    cert = Certificate(
        delta_prime=tuple(f"D{i}" for i in range(2, p + 1)),
        sigma_prime=sigma_prime,
    )
    return CaseInstance(
        family=50,
        sub_case="p=2q" if even else "p=2q-1",
        params=(("q", q), ("p", p)),
        system=system,
        sigma_labels=labels,
        options=tuple(options),
        certificates=(cert,),
        expected_budget=p * (p - 1) // 2,
    )


# ---------------------------------------------------------------------------
# family registry


def _fixed(**params: int) -> Callable[[], list[dict]]:
    return lambda: [dict(params)]


def _always(params: dict) -> bool:
    return True


FAMILIES: dict[tuple[int, str], FamilySpec] = {}


def _register(spec: FamilySpec) -> None:
    FAMILIES[spec.key] = spec


_register(
    FamilySpec(31, "", ("p",), "p >= 2", lambda d: d.get("p", 0) >= 2,
               _range_sweep(p=range(2, 7)), _build_31)
)
_register(
    FamilySpec(32, "", ("p",), "p >= 2", lambda d: d.get("p", 0) >= 2,
               _range_sweep(p=range(2, 7)), _build_32)
)
_register(
    FamilySpec(33, "", ("p",), "p >= 2", lambda d: d.get("p", 0) >= 2,
               _range_sweep(p=range(2, 7)), _build_33)
)
_register(FamilySpec(34, "", (), "fixed", _always, _fixed(), _build_34))
_register(FamilySpec(35, "", (), "fixed", _always, _fixed(), _build_35))
_register(
    FamilySpec(36, "", ("p",), "p >= 2", lambda d: d.get("p", 0) >= 2,
               _range_sweep(p=range(2, 7)), _build_36)
)
_register(
    FamilySpec(37, "", ("p",), "p >= 2", lambda d: d.get("p", 0) >= 2,
               _range_sweep(p=range(2, 7)), _build_37)
)
_register(FamilySpec(38, "", (), "fixed", _always, _fixed(), _build_38))
_register(FamilySpec(39, "", (), "fixed", _always, _fixed(), _build_39))
_register(FamilySpec(41, "", (), "fixed", _always, _fixed(), _build_41))
_register(
    FamilySpec(42, "p=0", ("q",), "p = 0, q >= 1",
               lambda d: d.get("p", 0) == 0 and d.get("q", 0) >= 1,
               _range_sweep(q=range(1, 6)), _build_42_p0)
)
_register(
    FamilySpec(42, "p>=1", ("p", "q"), "p >= 1, q >= 1",
               lambda d: d.get("p", 0) >= 1 and d.get("q", 0) >= 1,
               _range_sweep(p=range(1, 6), q=range(1, 6)), _build_42_p1)
)
_register(
    FamilySpec(43, "p=q=r=0", (), "p = q = r = 0",
               lambda d: all(d.get(k, 0) == 0 for k in "pqr"),
               _fixed(), _build_43_a)
)
_register(
    FamilySpec(43, "p!=0,q=r=0", ("p",), "p >= 1, q = r = 0",
               lambda d: d.get("p", 0) >= 1 and d.get("q", 0) == 0 and d.get("r", 0) == 0,
               _range_sweep(p=range(1, 6)), _build_43_b)
)
_register(
    FamilySpec(43, "p,q!=0,r=0", ("p", "q"), "p, q >= 1, r = 0",
               lambda d: d.get("p", 0) >= 1 and d.get("q", 0) >= 1 and d.get("r", 0) == 0,
               _range_sweep(p=range(1, 6), q=range(1, 6)), _build_43_c)
)
_register(
    FamilySpec(43, "p,q,r!=0", ("p", "q", "r"), "p, q, r >= 1",
               lambda d: all(d.get(k, 0) >= 1 for k in "pqr"),
               _range_sweep(p=range(1, 6), q=range(1, 6), r=range(1, 6)),
               _build_43_d)
)
_register(
    FamilySpec(44, "p=2", (), "p = 2", lambda d: d.get("p", 2) == 2,
               _fixed(), _build_44_p2)
)
_register(
    FamilySpec(44, "p>=3", ("p",), "p >= 3", lambda d: d.get("p", 0) >= 3,
               _range_sweep(p=range(3, 8)), _build_44_p3)
)
_register(
    FamilySpec(45, "p=1", ("q",), "p = 1, q >= 1",
               lambda d: d.get("p", 1) == 1 and d.get("q", 0) >= 1,
               _range_sweep(q=range(1, 6)), _build_45_p1)
)
_register(
    FamilySpec(45, "p=2", ("q",), "p = 2, q >= 1",
               lambda d: d.get("p", 2) == 2 and d.get("q", 0) >= 1,
               _range_sweep(q=range(1, 6)), _build_45_p2)
)
_register(
    FamilySpec(45, "p>=3", ("p", "q"), "p >= 3, q >= 1",
               lambda d: d.get("p", 0) >= 3 and d.get("q", 0) >= 1,
               _range_sweep(p=range(3, 8), q=range(1, 6)), _build_45_p3)
)
_register(FamilySpec(46, "p=4", (), "p = 4", lambda d: d.get("p", 4) == 4,
                     _fixed(), _build_46_p4))
_register(FamilySpec(46, "p=5", (), "p = 5", lambda d: d.get("p", 5) == 5,
                     _fixed(), _build_46_p5))
_register(FamilySpec(46, "p=6", (), "p = 6", lambda d: d.get("p", 6) == 6,
                     _fixed(), _build_46_p6))
_register(
    FamilySpec(47, "p=0", ("q",), "p = 0, q >= 1",
               lambda d: d.get("p", 0) == 0 and d.get("q", 0) >= 1,
               _range_sweep(q=range(1, 6)), _build_47_p0)
)
_register(
    FamilySpec(47, "p>=1", ("p", "q"), "p >= 1, q >= 1",
               lambda d: d.get("p", 0) >= 1 and d.get("q", 0) >= 1,
               _range_sweep(p=range(1, 6), q=range(1, 6)), _build_47_p1)
)
_register(FamilySpec(48, "p=1", (), "p = 1", lambda d: d.get("p", 1) == 1,
                     _fixed(), _build_48_p1))
_register(
    FamilySpec(48, "p>=1", ("p",), "printed p >= 1; data degenerates below p = 2",
               lambda d: d.get("p", 0) >= 2, _range_sweep(p=range(2, 7)),
               _build_48_pge1)
)
_register(
    FamilySpec(49, "", ("p",), "p >= 2", lambda d: d.get("p", 0) >= 2,
               _range_sweep(p=range(2, 7)), _build_49)
)
_register(
    FamilySpec(50, "p=2q-1", ("q",), "q >= 4 (p = 2q-1 >= 7)",
               lambda d: d.get("q", 0) >= 4
               and d.get("p", 2 * d.get("q", 0) - 1) == 2 * d.get("q", 0) - 1,
               _range_sweep(q=range(4, 8)), lambda d: _build_50(d, even=False))
)
_register(
    FamilySpec(50, "p=2q", ("q",), "q >= 4 (p = 2q >= 8)",
               lambda d: d.get("q", 0) >= 4
               and d.get("p", 2 * d.get("q", 0)) == 2 * d.get("q", 0),
               _range_sweep(q=range(4, 8)), lambda d: _build_50(d, even=True))
)


def family_keys() -> list[tuple[int, str]]:
    return sorted(FAMILIES, key=lambda k: (k[0], k[1]))


def instantiate(family: int, sub_case: str = "", **params: int) -> CaseInstance:
    """Build one case instance; raises on out-of-range parameters."""
    spec = FAMILIES.get((family, sub_case))
    if spec is None:
        raise KeyError(f"unknown case {family}/{sub_case or '-'}")
    merged = dict(params)
    if not spec.is_valid(merged):
        raise ValueError(
            f"case {family}/{sub_case or '-'}: parameters {params} outside {spec.validity}"
        )
    return spec.build(merged)


def sweep_instances(
    family: int | None = None,
    sub_case: str | None = None,
    overrides: dict[str, int] | None = None,
    ranges: dict | None = None,
) -> list[CaseInstance]:
    """All catalog instances of the default sweep (optionally filtered).

    ``overrides`` pins named parameters to single values (when they cover a
    family's free parameters the instance is built directly, so values
    outside the default sweep work too); ``ranges`` maps "family/sub_case"
    (or "family") keys to {param: [values]} replacing the default sweep.
    """
    out: list[CaseInstance] = []
    for key in family_keys():
        spec = FAMILIES[key]
        if family is not None and spec.family != family:
            continue
        if sub_case is not None and spec.sub_case != sub_case:
            continue
        built: list[CaseInstance] = []
        free = set(spec.param_names)
        if overrides and free and free <= set(overrides):
            ps = {name: overrides[name] for name in spec.param_names}
            if spec.is_valid(ps):
                built.append(spec.build(ps))
        else:
            param_sets = spec.default_sweep()
            if ranges:
                named = ranges.get(f"{spec.family}/{spec.sub_case}") or ranges.get(
                    str(spec.family)
                )
                if named:
                    param_sets = _range_sweep(
                        **{k: list(v) for k, v in named.items()}
                    )()
            built.extend(spec.build(ps) for ps in param_sets if spec.is_valid(ps))
        if overrides:
            built = [
                inst
                for inst in built
                if all(
                    dict(inst.params).get(name, value) == value
                    for name, value in overrides.items()
                )
            ]
        out.extend(built)
    return out


def expected_p(
    family: int, sub_case: str, params: dict[str, int], support_key: str
) -> Fraction | None:
    return instantiate(family, sub_case, **params).option(support_key).expected_p


def expected_theta(
    family: int, sub_case: str, params: dict[str, int], support_key: str
) -> tuple[Fraction, ...] | None:
    return instantiate(family, sub_case, **params).option(support_key).expected_theta
