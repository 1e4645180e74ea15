"""The catalogue of identities: ids, parameter schemas, rings and both-side builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import derived, remarks, theorem


@dataclass(frozen=True)
class ParamSpec:
    """An integer parameter; ``bound`` names the CLI range that caps it (k, n or m)."""

    name: str
    lo: int = 0
    bound: str = "n"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    params: tuple[ParamSpec, ...]
    ring: str
    lhs: Callable
    rhs: Callable
    paper_ref: str
    derive: Callable | None = None
    constraint: Callable[..., bool] | None = None
    # parameter cells outside the proved range; reported as "empirical"
    empirical: Callable[..., bool] | None = None
    tags: tuple[str, ...] = field(default_factory=tuple)
    both: Callable | None = None

    def build(self, **params):
        if self.both is not None:
            return self.both(**params)
        return self.lhs(**params), self.rhs(**params)

    def accepts(self, **params) -> bool:
        for p in self.params:
            if params.get(p.name) is None or params[p.name] < p.lo:
                return False
        return self.constraint is None or self.constraint(**params)


def _pair(fn: Callable) -> tuple[Callable, Callable]:
    """Split a builder returning (lhs, rhs) into two side builders."""
    return (lambda **p: fn(**p)[0]), (lambda **p: fn(**p)[1])


def _entry(id, params, ring, fn, paper_ref, derive=None, **kw) -> IdentityDescriptor:
    lhs, rhs = _pair(fn)
    return IdentityDescriptor(id, params, ring, lhs, rhs, paper_ref, derive, both=fn, **kw)


K = (ParamSpec("k", 0, "k"),)
N = (ParamSpec("n", 0, "n"),)
N1 = (ParamSpec("n", 1, "n"),)
NK = (ParamSpec("n", 0, "n"), ParamSpec("k", 0, "k"))
NM_EX1 = (ParamSpec("n", 0, "n"), ParamSpec("m", -(10**9), "m"))
NM_POCH = (ParamSpec("n", 0, "n"), ParamSpec("m", 0, "m"))

_ENTRIES = [
    IdentityDescriptor(
        "THM1.i", K, "Polynomial(rho)", theorem.g1_lhs, theorem.g1_rhs,
        "Eq. (G1): (2k)!/k! (1+rho)^k as a double-factorial sum",
        tags=("theorem",),
    ),
    IdentityDescriptor(
        "THM1.ii", K, "Polynomial(rho)", theorem.g2_lhs, theorem.g2_rhs,
        "Eq. (G2): (1+rho)^k as a double binomial sum",
        tags=("theorem",),
    ),
    IdentityDescriptor(
        "THM1.iii", NM_EX1, "RationalFn(beta)",
        lambda n, m: theorem.ex1_lhs(n, m), lambda n, m: theorem.ex1_rhs(n, m),
        "Eq. (Ex1): alternating sum of rising-factorial ratios, integer m",
        empirical=lambda n, m: m < 0,
        tags=("theorem",),
    ),
    IdentityDescriptor(
        "THM1.iv", N, "Polynomial(rho,beta)", theorem.ex2_lhs, theorem.even_moment_rhs,
        "Eq. (Ex2): E(X-Y)^n for the bivariate gamma pair via connection coefficients",
        tags=("theorem",),
    ),
    IdentityDescriptor(
        "THM1.v", N, "Polynomial(rho,beta)", theorem.ex3_lhs, theorem.even_moment_rhs,
        "Eq. (Ex3): E(X-Y)^n for the bivariate gamma pair via conditional moments",
        tags=("theorem",),
    ),
    _entry("R-G1-23", K, "Integer", remarks.g1_rho_two_thirds,
           "(G1) at rho=2/3: sum C(2k,2j) 5^j (2j-1)!!(2k-2j-1)!! = (2k)! 3^k/k!",
           derived.g1_rho_two_thirds),
    _entry("R-G1-13", K, "Rational", remarks.g1_rho_one_third,
           "(G1) at rho=1/3: sum C(2k,2j) 2^j (2j-1)!!(2k-2j-1)!! = (2k)! 3^k/(k! 2^k)",
           derived.g1_rho_one_third),
    _entry("R-G1-43", K, "Integer", remarks.g1_rho_four_thirds,
           "(G1) at rho=4/3: sum C(2k,2j) (-7)^j (2j-1)!!(2k-2j-1)!! = (-1)^k (2k)! 3^k/k!",
           derived.g1_rho_four_thirds),
    _entry("R-G1-FIB", K, "Integer", remarks.g1_fibonacci,
           "(G1) at rho=sqrt5, sqrt5 part: (2k)!/k! F_k = 2^k sum (-1)^j C(2k,2j) F_{2k-2j} (2j-1)!!(2k-2j-1)!!",
           derived.g1_fibonacci),
    _entry("R-G1-LUC", K, "Integer", remarks.g1_lucas,
           "(G1) at rho=sqrt5, rational part: (2k)!/k! L_k = 2^k sum (-1)^j C(2k,2j) L_{2k-2j} (2j-1)!!(2k-2j-1)!!",
           derived.g1_lucas),
    _entry("R-G1-I-4N", N, "Integer", remarks.g1_i_4n,
           "(G1), k=4n: (8n)!/(4n)! = sum C(8n,2j)(2j-1)!!(8n-2j-1)!!",
           derived.g1_i_4n),
    _entry("R-G1-I-4N1-A", N, "Integer", remarks.g1_i_4n1_a,
           "(G1) at rho=i, k=4n+1, real part: terms C(8n+2,4m+2)(4m+1)!!(8n-4m-1)!!",
           derived.g1_i_4n1_a),
    _entry("R-G1-I-4N1-B", N, "Integer", remarks.g1_i_4n1_b,
           "(G1) at rho=i, k=4n+1, imaginary part: terms C(8n+2,4m)(4m-1)!!(8n-4m+1)!!",
           derived.g1_i_4n1_b),
    _entry("R-G2-HALF", K, "Integer", remarks.g2_alternating,
           "(G2) at rho=-1/2, times 2^k: 1 = sum_j (-1)^j sum_m C(k,j-2m) C(k-j+2m,m)",
           derived.g2_alternating),
    _entry("R-G2-I-RE", N, "Rational", remarks.g2_i_real,
           "(G2) at rho=i, k=4n, real part: 4^n = (-1)^n 16^-n sum ...",
           derived.g2_i_real),
    _entry("R-G2-I-IM", N, "Integer", remarks.g2_i_imag,
           "(G2) at rho=i, k=4n, imaginary part: 0 = sum ...",
           derived.g2_i_imag),
    _entry("R-EX1-B1", NK, "Integer", remarks.ex1_beta_one,
           "(Ex1) at beta=1, m=k: sum (-1)^j C(n,j) C(j+k,j) = (-1)^n C(k,n)",
           derived.ex1_beta_one),
    _entry("R-EX1-B12", NK, "Rational", remarks.ex1_beta_half,
           "(Ex1) at beta=1/2, m=k: double-factorial form",
           derived.ex1_beta_half),
    _entry("R-EX2-B12", NK, "Rational", remarks.ex2_beta_half,
           "beta=1/2 double-factorial identity (follows from (Ex1) with m=n+k)",
           derived.ex2_beta_half),
    _entry("R-EX2-EXPLR", N, "Polynomial(rho)", remarks.explr,
           "Eq. (explr): (Ex2) at beta=1",
           derived.explr),
    _entry("R-EX2-COEF", NK, "Integer", remarks.ex2_coefficients,
           "(explr), coefficient of rho^k: sum (-1)^(m-k) C(m,k) C(n-m,k) = C(n/2,k)",
           derived.ex2_coefficients, constraint=lambda n, k: k <= n),
    _entry("R-EX2-RHO1-B1", N1, "Integer", remarks.ex2_rho_one_beta_one,
           "(explr) at rho=1, n >= 1",
           derived.ex2_rho_one_beta_one),
    _entry("R-EX2-B12-X", N, "Polynomial(x)", remarks.ex2_beta_half_x,
           "(Ex2) at beta=1/2 in the variable x=2rho, divided by n!",
           derived.ex2_beta_half_x),
    _entry("R-EX2-X0", N, "Integer", remarks.ex2_x_zero,
           "(Ex2) at beta=1/2, x=0: sum (-1)^m C(n,m)(2m-1)!!(2n-2m-1)!!",
           derived.ex2_x_zero),
    _entry("R-EX2-RHO1", N1, "Polynomial(beta)", remarks.ex2_rho_one,
           "(Ex2) at rho=1, n >= 1",
           derived.ex2_rho_one),
    _entry("R-EX3-RHO0", N, "Polynomial(beta)", remarks.ex3_rho_zero,
           "(Ex3) at rho=0: sum (-1)^(n-m) C(n,m) (beta)^(n-m) (beta)^(m)",
           derived.ex3_rho_zero),
    _entry("VANDERMONDE", N, "Polynomial(alpha,beta)", remarks.vandermonde,
           "rising-factorial Vandermonde: sum C(n,m) (beta)^(n-m) (alpha)^(m) = (alpha+beta)^(n)"),
    _entry("R-EX3-HALF", N, "Polynomial(beta)", remarks.ex3_rho_half,
           "(Ex3) at rho=1/2",
           derived.ex3_rho_half),
    _entry("R-EX3-COEF", NK, "Polynomial(beta)", remarks.ex3_coefficients,
           "(Ex3), coefficient of rho^k scaled by (beta)^(k) (n-k)! k!/n!",
           derived.ex3_coefficients, constraint=lambda n, k: k <= n),
    _entry("COR-PHI-LUC", K, "Integer", remarks.phi_lucas,
           "(G1) at the golden ratio phi=(sqrt5-1)/2, rational part (Lucas form)",
           derived.phi_lucas),
    _entry("COR-PHI-FIB", K, "Integer", remarks.phi_fibonacci,
           "(G1) at the golden ratio phi=(sqrt5-1)/2, sqrt5 part (Fibonacci form)",
           derived.phi_fibonacci),
    _entry("POCH-ADD", NM_POCH, "Polynomial(beta)", remarks.pochhammer_addition,
           "rising-factorial addition law (beta)^(n) (beta+n)^(m) = (beta)^(n+m)"),
    _entry("LF-INV", N, "Integer", remarks.lucas_fibonacci_norm,
           "L_n^2 - 5F_n^2 = (-1)^n 4"),
    _entry("PHI-POW", N, "QuadExt(5)", remarks.phi_powers,
           "golden-ratio powers: (1+phi)^n = L_n/2 + F_n sqrt5/2, phi^n = (-1)^n (L_n/2 - F_n sqrt5/2)"),
]

REGISTRY: dict[str, IdentityDescriptor] = {}
for _d in _ENTRIES:
    if _d.id in REGISTRY:
        raise RuntimeError(f"duplicate identity id {_d.id}")
    REGISTRY[_d.id] = _d

ORDER = {ident: i for i, ident in enumerate(REGISTRY)}


class UnknownIdentity(KeyError):
    pass


def get(ident: str) -> IdentityDescriptor:
    try:
        return REGISTRY[ident]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {ident!r}") from None


def build_special(ident: str, **params):
    """Both sides of a registered identity instance in its declared ring."""
    desc = get(ident)
    if not desc.accepts(**params):
        raise ValueError(f"parameters {params} out of range for {ident}")
    return desc.build(**params)
