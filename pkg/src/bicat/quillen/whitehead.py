"""Whitehead certifier: a pseudofunctor is a biequivalence iff it is es, ef and ff.

:func:`whitehead` either returns a :class:`BiequivalenceCertificate` carrying an
inverse pseudofunctor ``G`` with unit, counit, their inverses and the four
invertible modifications, or a :class:`Counterexample` to one of the three
local conditions.  :func:`check_certificate` re-checks a certificate from its
tables alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..adjunctions import (
    adjoint_inverse,
    find_equivalences,
    invert_strong_transformation,
)
from ..core.model import ValidationReport, Violation
from ..errors import MalformedInput, WitnessSearchFailed
from ..functors import (
    LaxFunctor,
    LaxTransformation,
    Modification,
    classify,
    compose_lax_functors,
    compose_transformations,
    identity_functor,
    identity_transformation,
    validate_lax_functor,
    validate_lax_transformation,
    validate_modification,
)
from ..slice import slice_identity_filler
from .terminal import is_initial, terminal_data_from_components
from .theorem_a import build_slices, quillen_a


@dataclass(frozen=True)
class LocalCheck:
    ok: bool
    witness: tuple = ()
    detail: str = ""


@dataclass(frozen=True)
class EsEfFf:
    es: LocalCheck
    ef: LocalCheck
    ff: LocalCheck
    pairs: tuple  # object pairs (A, B) over which ef and ff were quantified

    @property
    def ok(self):
        return self.es.ok and self.ef.ok and self.ff.ok


@dataclass(frozen=True)
class Counterexample:
    condition: str  # "es", "ef" or "ff"
    witness: tuple
    detail: str = ""

    def text(self):
        w = ", ".join(str(x) for x in self.witness)
        return f"counterexample: F is not {self.condition} at ({w})\n  {self.detail}\n"


def ef_preimages(F, A, B, h):
    """All ``p: A -> B`` with ``Fp`` isomorphic to ``h``."""
    C = F.tgt
    return [p for p in F.src.hom(A, B) if C.isos(F.one_map[p], h)]


def check_es_ef_ff(F):
    """Essential surjectivity, essential fullness and full faithfulness, each with a witness.

    ef and ff are read locally for every ordered pair of source objects.
    """
    B, C = F.src, F.tgt
    es = LocalCheck(True)
    for x in C.sorted_objects():
        if not any(find_equivalences(C, F.obj_map[a], x) for a in B.sorted_objects()):
            es = LocalCheck(False, (x,), f"no invertible 1-cell FA -> {x}")
            break
    pairs = tuple((a, b) for a in B.sorted_objects() for b in B.sorted_objects())
    ef = LocalCheck(True)
    for a, b in pairs:
        for h in C.hom(F.obj_map[a], F.obj_map[b]):
            if not ef_preimages(F, a, b, h):
                ef = LocalCheck(False, (h,), f"no 1-cell {a} -> {b} has image isomorphic to {h}")
                break
        if not ef.ok:
            break
    ff = LocalCheck(True)
    for a, b in pairs:
        for p in B.hom(a, b):
            for q in B.hom(a, b):
                image = [F.two_map[c] for c in B.cells(p, q)]
                target = C.cells(F.one_map[p], F.one_map[q])
                if len(set(image)) != len(image) or set(image) != set(target):
                    ff = LocalCheck(False, (p, q), f"2-cells {p} => {q} do not map bijectively")
                    break
            if not ff.ok:
                break
        if not ff.ok:
            break
    return EsEfFf(es, ef, ff, pairs)


@dataclass
class WhiteheadWitnesses:
    bars: dict  # X -> (Xbar, f_Xbar)
    adjunctions: dict  # X -> promoted adjoint equivalence on f_Xbar
    choices: dict  # X -> {slice object: (p_A, theta_A)}
    slices: dict
    terminal: dict


def build_witnesses(F):
    """Choose ``(Xbar, f_Xbar)`` and initial 1-cells ``(p_A, theta_A)`` for every slice."""
    B, C = F.src, F.tgt
    slices = build_slices(F)
    bars, adjs, choices, terminal = {}, {}, {}, {}
    for x in C.sorted_objects():
        pick = None
        for a in B.sorted_objects():
            eqs = find_equivalences(C, F.obj_map[a], x)
            if eqs:
                pick = (a, eqs[0])
                break
        if pick is None:
            raise WitnessSearchFailed("es", x)
        xb, fx = pick
        adj = adjoint_inverse(C, fx)
        bars[x], adjs[x] = pick, adj
        eps_inv = C.inverse(adj.eps)

        S = slices[x]
        D = S.bicat
        bot = S.obj_id(xb, fx)
        chosen, k1 = {}, {}
        for z in D.sorted_objects():
            a, fa = S.obj_tag[z]
            if z == bot:
                p, theta = B.id1[xb], slice_identity_filler(F, xb, fx)
            else:
                p = theta = None
                back = C.comp(adj.g, fa)
                for q in B.hom(a, xb):
                    isos = C.isos(back, F.one_map[q])
                    if isos:
                        p = q
                        theta = C.chain(
                            C.l_inv(fa),
                            C.wr(eps_inv, fa),
                            C.a(fx, adj.g, fa),
                            C.wl(fx, isos[0]),
                        )
                        break
                if p is None:
                    raise WitnessSearchFailed("ef", z)
            k = S.one_id(p, theta, fx)
            if not is_initial(D, k):
                raise WitnessSearchFailed("initial", k)
            chosen[z] = (p, theta)
            k1[z] = k
        choices[x] = chosen
        terminal[x] = terminal_data_from_components(D, bot, k1)
        terminal[x].candidates = [bot]
    return WhiteheadWitnesses(bars, adjs, choices, slices, terminal)


@dataclass
class BiequivalenceCertificate:
    F: LaxFunctor
    G: LaxFunctor
    eta: LaxTransformation
    eps: LaxTransformation
    eta_inv: LaxTransformation
    eps_inv: LaxTransformation
    eta_unit: Modification  # 1 => eta_inv eta
    eta_counit: Modification  # eta eta_inv => 1
    eps_unit: Modification
    eps_counit: Modification
    evidence: dict = field(default_factory=dict)  # name -> status line


def whitehead(F):
    """Certificate of biequivalence, or the first failing local condition."""
    report = validate_lax_functor(F)
    if not report.ok:
        raise MalformedInput(f"F is not a lax functor: {report.violations[0].describe()}")
    if "pseudo" not in classify(F):
        raise MalformedInput("the Whitehead certifier needs a pseudofunctor")
    local = check_es_ef_ff(F)
    for name in ("es", "ef", "ff"):
        c = getattr(local, name)
        if not c.ok:
            return Counterexample(name, c.witness, c.detail)

    wit = build_witnesses(F)
    result = quillen_a(F, terminal=wit.terminal, slices=wit.slices)
    G, eta, eps = result.G, result.eta, result.eps
    for key in ("G", "eta", "eps"):
        if not result.reports[key].ok:
            raise WitnessSearchFailed(key, result.reports[key].violations[0].describe())
    if "pseudo" not in classify(G):
        raise WitnessSearchFailed("G", "G is not a pseudofunctor")
    eta_inv, eta_unit, eta_counit = invert_strong_transformation(eta)
    eps_inv, eps_unit, eps_counit = invert_strong_transformation(eps)

    evidence = {k: r.status for k, r in result.reports.items()}
    evidence["es"] = evidence["ef"] = evidence["ff"] = "pass"
    evidence["ef_pairs"] = " ".join(f"{a}|{b}" for a, b in local.pairs)
    return BiequivalenceCertificate(
        F, G, eta, eps, eta_inv, eps_inv, eta_unit, eta_counit, eps_unit, eps_counit, evidence
    )


def check_certificate(cert):
    """Re-validate every part of a certificate and how the parts fit together."""
    F, G = cert.F, cert.G
    B, C = F.src, F.tgt
    found = []

    def need(ok, tag, *witness):
        if not ok:
            found.append(Violation(tag, tuple(witness)))

    def run(tag, report):
        for v in report.violations:
            found.append(Violation(f"{tag}:{v.axiom}", v.witness, v.lhs, v.rhs))

    run("F", validate_lax_functor(F))
    run("G", validate_lax_functor(G))
    need("pseudo" in classify(F), "F-pseudo")
    need("pseudo" in classify(G), "G-pseudo")
    need(G.src == C and G.tgt == B, "G-type")
    if found:
        return ValidationReport.from_violations(found)

    GF, FG = compose_lax_functors(G, F), compose_lax_functors(F, G)
    expected = {
        "eta": (identity_functor(B), GF),
        "eps": (FG, identity_functor(C)),
        "eta_inv": (GF, identity_functor(B)),
        "eps_inv": (identity_functor(C), FG),
    }
    for name, (src, tgt) in expected.items():
        t = getattr(cert, name)
        if t.src != src or t.tgt != tgt:
            found.append(Violation("transformation-type", (name,)))
            continue
        run(name, validate_lax_transformation(t))
        need(t.strong, "strong", name)
        bic = t.src.tgt
        for x in sorted(t.comp1):
            s, e = bic.one_cells[t.comp1[x]]
            need(t.comp1[x] in find_equivalences(bic, s, e), "invertible-component", name, x)

    mods = {
        "eta_unit": (identity_transformation(cert.eta.src), compose_transformations(cert.eta_inv, cert.eta)),
        "eta_counit": (compose_transformations(cert.eta, cert.eta_inv), identity_transformation(cert.eta.tgt)),
        "eps_unit": (identity_transformation(cert.eps.src), compose_transformations(cert.eps_inv, cert.eps)),
        "eps_counit": (compose_transformations(cert.eps, cert.eps_inv), identity_transformation(cert.eps.tgt)),
    }
    for name, (src, tgt) in mods.items():
        m = getattr(cert, name)
        if m.src != src or m.tgt != tgt:
            found.append(Violation("modification-type", (name,)))
            continue
        run(name, validate_modification(m))
        need(m.invertible, "invertible-modification", name)
    return ValidationReport.from_violations(found)
