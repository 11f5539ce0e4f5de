"""Ideals and quotient constructions over finite carriers.

Two quotient kinds are supported:

standard
    True additive cosets x + I.  Requires the subset to be a genuine
    ideal; the number of classes is |S| / |I|.

rees
    The ideal collapses to a single zero class and every element outside
    it is its own class, giving |S| - |I| + 1 classes.  Multiplication
    of classes is the ambient product read through the collapse.  Class
    *addition* is not well defined in general; the diagnostics report
    what actually holds instead of assuming it.

The ideal class is labeled with the ideal's name (default "I"); standard
cosets are labeled "<rep>+<name>" and rees classes keep their ambient
element label.
"""

import numpy as np

from .errors import NotAnIdeal, ParseError, TooLarge
from .intervals import NaturalInterval, split_top_level
from .structures import (
    FiniteStructure,
    axiom_report,
    find_special_elements,
    is_strict_semiring,
)


class Ideal:
    """A subset of a carrier, held as sorted element indices."""

    __slots__ = ("ambient", "indices", "name", "generators")

    def __init__(self, ambient, indices, name="I", generators=None):
        idx = sorted({int(i) for i in indices})
        if not idx:
            raise NotAnIdeal("an ideal cannot be empty")
        if idx[0] < 0 or idx[-1] >= ambient.n:
            raise NotAnIdeal("element index out of range")
        self.ambient = ambient
        self.indices = idx
        self.name = name or "I"
        self.generators = list(generators) if generators else None

    @property
    def order(self):
        return len(self.indices)

    def members(self):
        return self.ambient.labels(self.indices)

    def mask(self):
        m = np.zeros(self.ambient.n, dtype=bool)
        m[self.indices] = True
        return m

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ambient is other.ambient and self.indices == other.indices

    def __hash__(self):
        return hash((id(self.ambient), tuple(self.indices)))

    def __repr__(self):
        return f"<ideal {self.name}: {self.order} of {self.ambient.n}>"


def _inside(mask, vals):
    """Membership of table entries, treating -1 (out of carrier) as out."""
    return (vals >= 0) & mask[np.maximum(vals, 0)]


def is_ideal(s, indices):
    """Exhaustively check that the index subset is a two-sided ideal.

    Returns (ok, info); on failure info carries the reason and the first
    witness in carrier order.
    """
    n = s.n
    idx = np.array(sorted({int(i) for i in indices}), dtype=np.int64)
    if idx.size == 0:
        return False, {"reason": "empty subset"}
    if idx[0] < 0 or idx[-1] >= n:
        return False, {"reason": "element index out of range"}
    z = s.identity_index("add")
    if z is None:
        return False, {"reason": "ambient has no additive identity"}
    mask = np.zeros(n, dtype=bool)
    mask[idx] = True
    if not mask[z]:
        return False, {"reason": "does not contain zero"}
    neg = s.neg_index()
    if neg is None:
        return False, {"reason": "ambient addition is not a group"}
    bad = idx[~mask[neg[idx]]]
    if bad.size:
        return False, {"reason": "not closed under negation",
                       "witness": s.label(int(bad[0]))}
    sums = s.table("add")[np.ix_(idx, idx)]
    ok = _inside(mask, sums)
    if not ok.all():
        i, j = np.argwhere(~ok)[0]
        return False, {"reason": "not closed under addition",
                       "witness": [s.label(int(idx[i])), s.label(int(idx[j]))]}
    t = s.table("mul")
    left = t[:, idx]
    ok = _inside(mask, left)
    if not ok.all():
        x, j = np.argwhere(~ok)[0]
        return False, {"reason": "not absorbing on the left",
                       "witness": [s.label(int(x)), s.label(int(idx[j]))]}
    right = t[idx, :]
    ok = _inside(mask, right)
    if not ok.all():
        i, y = np.argwhere(~ok)[0]
        return False, {"reason": "not absorbing on the right",
                       "witness": [s.label(int(idx[i])), s.label(int(y))]}
    return True, {"order": int(idx.size)}


def generate_ideal(s, generator_indices):
    """Smallest two-sided ideal containing the generators.

    Fixpoint closure under negation, addition within the set, and
    products with the whole carrier; each new member is expanded once.
    """
    z = s.identity_index("add")
    neg = s.neg_index()
    if z is None or neg is None:
        raise NotAnIdeal("ambient addition is not a group")
    t = s.table("mul")
    ta = s.table("add")
    n = s.n
    mask = np.zeros(n, dtype=bool)
    mask[z] = True
    start = [int(g) for g in generator_indices]
    if any(g < 0 or g >= n for g in start):
        raise NotAnIdeal("generator index out of range")
    mask[start] = True
    mask[neg[start]] = True
    frontier = np.where(mask)[0]
    while frontier.size:
        members = np.where(mask)[0]
        vals = np.concatenate([
            t[:, frontier].ravel(),
            t[frontier, :].ravel(),
            ta[np.ix_(members, frontier)].ravel(),
            neg[frontier],
        ])
        if (vals < 0).any():
            raise NotAnIdeal("generation left the carrier "
                             "(an operation is not closed)")
        fresh = np.unique(vals)
        fresh = fresh[~mask[fresh]]
        mask[fresh] = True
        frontier = fresh
    return [int(i) for i in np.where(mask)[0]]


def _is_zero_interval(e, domain):
    return e.lo == domain.zero and e.hi == domain.zero


def parse_ideal_spec(s, text):
    """Build the subset named by an ideal spec.  No validation is done
    here — run is_ideal (or construct a quotient) to check it.

    Grammar:
        gen{e1,e2,...}       ideal generated by the listed elements
        col-zero             intervals [0,b]; matrices with column 0 zero
        row-zero             intervals [a,0]; matrices with row 0 zero
        diag-multiples:<k>   ideal generated by the degenerate [k,k]
    """
    t = text.strip()
    d = s.domain
    if t.startswith("gen{"):
        if not t.endswith("}"):
            raise ParseError("unterminated gen{...}", text=text,
                             expected=["}"])
        if s.parse_element is None:
            raise ParseError(
                f"carrier {s.name!r} has no element syntax for gen{{...}}",
                text=text)
        gens = []
        for part in split_top_level(t[4:-1]):
            part = part.strip()
            if not part:
                continue
            e = s.parse_element(part)
            if e not in s.index:
                raise ParseError(f"{part!r} is not in the carrier", text=text)
            gens.append(s.index[e])
        if not gens:
            raise ParseError("gen{...} needs at least one generator",
                             text=text)
        return Ideal(s, generate_ideal(s, gens), name=t, generators=gens)
    if t in ("col-zero", "row-zero"):
        lo_side = (t == "col-zero")
        if s.kind == "interval":
            idx = [i for i, e in enumerate(s.elements)
                   if (e.lo if lo_side else e.hi) == d.zero]
        elif s.kind == "matrix":
            def line_zero(m):
                if lo_side:
                    ents = [m.entry(i, 0) for i in range(m.rows)]
                else:
                    ents = [m.entry(0, j) for j in range(m.cols)]
                return all(_is_zero_interval(e, d) for e in ents)
            idx = [i for i, m in enumerate(s.elements) if line_zero(m)]
        else:
            raise ParseError(
                f"{t} is defined for interval and matrix carriers, "
                f"not {s.kind}", text=text)
        return Ideal(s, idx, name=t)
    if t.startswith("diag-multiples:"):
        if s.kind != "interval":
            raise ParseError("diag-multiples needs an interval carrier",
                             text=text)
        k = d.parse_scalar(t[len("diag-multiples:"):])
        g = NaturalInterval(d, k, k, s.flavor)
        if g not in s.index:
            raise ParseError(f"[{k},{k}] is not in the carrier", text=text)
        return Ideal(s, generate_ideal(s, [s.index[g]]), name=t,
                     generators=[s.index[g]])
    raise ParseError(
        f"unknown ideal spec {text!r}", text=text,
        expected=["gen{...}", "col-zero", "row-zero", "diag-multiples:<k>"])


def _sum_of_sets(ta, a_idx, b_idx):
    """{x+y : x in A, y in B} as a frozenset, or None if it leaves the
    carrier.  For ideals of a ring with commutative addition this is the
    join A + B."""
    sums = ta[np.ix_(a_idx, b_idx)].ravel()
    if (sums < 0).any():
        return None
    return frozenset(int(v) for v in np.unique(sums))


def enumerate_ideals(s, cap=4096):
    """All two-sided ideals, found as principal closures plus joins.

    Requires commutative group addition (so that the sum of two ideals
    is again an ideal).  Deterministic: results sorted by (order,
    membership).
    """
    if s.neg_index() is None:
        raise NotAnIdeal("ambient addition is not a group")
    comm, _ = s.commutative("add")
    if not comm:
        raise NotAnIdeal("ambient addition is not commutative")
    ta = s.table("add")
    seen = set()
    found = []

    def note(fs):
        if fs is not None and fs not in seen:
            seen.add(fs)
            found.append(fs)
            if len(found) > cap:
                raise TooLarge(f"more than {cap} ideals")
            return True
        return False

    for i in range(s.n):
        note(frozenset(generate_ideal(s, [i])))
    frontier = list(found)
    while frontier:
        fresh = []
        base = list(found)
        for fa in base:
            ia = np.array(sorted(fa), dtype=np.int64)
            for fb in frontier:
                if fa == fb:
                    continue
                ib = np.array(sorted(fb), dtype=np.int64)
                joined = _sum_of_sets(ta, ia, ib)
                if joined is not None and joined not in seen:
                    seen.add(joined)
                    found.append(joined)
                    fresh.append(joined)
                    if len(found) > cap:
                        raise TooLarge(f"more than {cap} ideals")
        frontier = fresh
    ordered = sorted(found, key=lambda f: (len(f), sorted(f)))
    return [Ideal(s, sorted(f)) for f in ordered]


def maximal_minimal_ideals(s, cap=4096):
    """Minimal nonzero and maximal proper ideals, with totals."""
    ideals = enumerate_ideals(s, cap=cap)
    full = frozenset(range(s.n))
    z = s.identity_index("add")
    zero = frozenset({z}) if z is not None else frozenset()
    sets = [frozenset(i.indices) for i in ideals]
    proper = [f for f in sets if f != full]
    nontrivial = [f for f in proper if f != zero]
    minimal = [f for f in nontrivial
               if not any(g < f for g in nontrivial)]
    maximal = [f for f in proper if not any(f < g for g in proper)]

    def wrap(fss):
        return [Ideal(s, sorted(f))
                for f in sorted(fss, key=lambda f: (len(f), sorted(f)))]

    return {
        "total": len(sets),
        "proper_nonzero": len(nontrivial),
        "minimal": wrap(minimal),
        "maximal": wrap(maximal),
    }


def ideal_summary(ideal, max_members=60):
    out = {"name": ideal.name, "order": ideal.order}
    if ideal.order <= max_members:
        out["members"] = ideal.members()
    else:
        out["members_sample"] = ideal.ambient.labels(
            ideal.indices[:max_members])
    return out


# ----------------------------------------------------------------------


class QuotientStructure:
    """Partition of a carrier by an ideal, with class-level tables.

    class_of maps ambient index -> class id; reps holds one ambient
    index per class with the ideal's class always id 0.
    """

    def __init__(self, ambient, ideal, kind):
        if kind not in ("standard", "rees"):
            raise ValueError(f"unknown quotient kind {kind!r}")
        self.ambient = ambient
        self.ideal = ideal
        self.kind = kind
        self._tables = {}
        self._structure = None
        n = ambient.n
        if kind == "rees":
            mask = ideal.mask()
            outside = [i for i in range(n) if not mask[i]]
            self.reps = [ideal.indices[0]] + outside
            self.class_of = np.empty(n, dtype=np.int32)
            self.class_of[ideal.indices] = 0
            for c, i in enumerate(outside, start=1):
                self.class_of[i] = c
        else:
            ta = ambient.table("add")
            idx = np.array(ideal.indices, dtype=np.int64)
            cosets = ta[:, idx]
            if (cosets < 0).any():
                raise NotAnIdeal("addition leaves the carrier")
            rep = cosets.min(axis=1)
            uniq = np.unique(rep)
            if len(uniq) * ideal.order != n:
                raise NotAnIdeal(
                    "cosets do not partition the carrier evenly — the "
                    "subset is not an additive subgroup")
            z = ambient.identity_index("add")
            zero_rep = int(rep[z])
            order = [zero_rep] + [int(r) for r in uniq if r != zero_rep]
            self.class_of = np.empty(n, dtype=np.int32)
            for c, r in enumerate(order):
                self.class_of[rep == r] = c
            self.reps = order

    @property
    def n_classes(self):
        return len(self.reps)

    def class_label(self, c):
        if c == 0:
            return self.ideal.name
        rep = self.ambient.label(self.reps[c])
        if self.kind == "standard":
            return f"{rep}+{self.ideal.name}"
        return rep

    def class_table(self, op):
        t = self._tables.get(op)
        if t is None:
            amb = self.ambient.table(op)
            r = np.array(self.reps, dtype=np.int64)
            sub = amb[np.ix_(r, r)]
            t = np.where(sub >= 0, self.class_of[np.maximum(sub, 0)],
                         -1).astype(np.int32)
            self._tables[op] = t
        return t

    def structure(self):
        """The classes as a FiniteStructure (tables prebuilt)."""
        if self._structure is None:
            labels = [self.class_label(c) for c in range(self.n_classes)]
            pos = {lab: c for c, lab in enumerate(labels)}
            tables = {"mul": self.class_table("mul")}
            if self.ambient.has_op("add"):
                tables["add"] = self.class_table("add")

            def mk(op):
                tab = tables[op]

                def fn(x, y):
                    k = int(tab[pos[x], pos[y]])
                    return labels[k] if k >= 0 else None

                return fn

            self._structure = FiniteStructure(
                labels, mul=mk("mul"),
                add=mk("add") if "add" in tables else None,
                name=f"{self.ambient.name}/{self.ideal.name}[{self.kind}]",
                kind="quotient", tables=tables)
        return self._structure

    def well_defined(self, op):
        """Does the class of x∘y depend only on the classes of x and y?

        Compares the true class of every ambient product against the
        representative-based class table; returns (ok, witness).
        """
        amb = self.ambient.table(op)
        actual = np.where(amb >= 0, self.class_of[np.maximum(amb, 0)], -1)
        tab = self.class_table(op)
        predicted = tab[self.class_of[:, None], self.class_of[None, :]]
        diff = np.argwhere(actual != predicted)
        if diff.size:
            x, y = (int(v) for v in diff[0])
            return False, {
                "x": self.ambient.label(x),
                "y": self.ambient.label(y),
                "class_of_result": self.class_label(int(actual[x, y]))
                if actual[x, y] >= 0 else None,
                "class_from_reps": self.class_label(int(predicted[x, y]))
                if predicted[x, y] >= 0 else None,
            }
        return True, None

    def diagnostics(self):
        out = {}
        for op in ("add", "mul"):
            if op == "add" and not self.ambient.has_op("add"):
                continue
            ok, wit = self.well_defined(op)
            out[f"well_defined_{op}"] = ok
            if wit:
                out[f"well_defined_{op}_witness"] = wit
        cls = self.structure()
        if cls.has_op("add"):
            try:
                assoc, wit = cls.associative("add")
            except TooLarge:
                assoc, wit = None, None
                out["associative_add_note"] = "skipped: too many classes"
            out["associative_add"] = assoc
            if assoc is False:
                out["associative_add_witness"] = cls.labels(wit)
        return out


def standard_quotient(s, ideal):
    ok, info = is_ideal(s, ideal.indices)
    if not ok:
        raise NotAnIdeal(f"{ideal.name}: {info['reason']}")
    return QuotientStructure(s, ideal, "standard")


def rees_quotient(s, ideal):
    ok, info = is_ideal(s, ideal.indices)
    if not ok:
        raise NotAnIdeal(f"{ideal.name}: {info['reason']}")
    q = QuotientStructure(s, ideal, "rees")
    assert q.n_classes == s.n - ideal.order + 1
    return q


def semifield_verdict(cls):
    """Commutative, unital, strict, zero-divisor-free — all computed."""
    out = {}
    comm, cw = cls.commutative("mul")
    out["commutative"] = comm
    if not comm:
        out["commutative_counterexample"] = cls.labels(cw)
    e = cls.identity_index("mul")
    out["identity"] = cls.label(e) if e is not None else None
    z = cls.identity_index("add")
    if z is None:
        z = cls.absorbing_index("mul")
    if z is not None:
        t = cls.table("mul")
        m = (t == z)
        m[z, :] = False
        m[:, z] = False
        hits = np.argwhere(m)
        out["has_zero_divisors"] = bool(hits.size)
        if hits.size:
            i, j = hits[0]
            out["zero_divisor_witness"] = [cls.label(int(i)),
                                           cls.label(int(j))]
    else:
        out["has_zero_divisors"] = None
    if cls.has_op("add"):
        strict, sw = is_strict_semiring(cls)
        out["strict_addition"] = strict
        if sw:
            out["strict_counterexample"] = list(sw)
    reasons = []
    if not out["commutative"]:
        reasons.append("multiplication is not commutative")
    if out["identity"] is None:
        reasons.append("no multiplicative identity")
    if out.get("has_zero_divisors"):
        reasons.append("zero divisors exist")
    if out.get("strict_addition") is False:
        reasons.append("addition is not strict")
    out["verdict"] = "semifield" if not reasons else "; ".join(reasons)
    return out


def quotient_analysis(q, workers=1, element_cap=1024):
    """Full serializable report for a quotient."""
    cls = q.structure()
    out = {
        "schema": "natint/1",
        "kind": q.kind,
        "ambient": q.ambient.name,
        "ambient_order": q.ambient.n,
        "ideal": ideal_summary(q.ideal),
        "classes": cls.n,
        "diagnostics": q.diagnostics(),
        "axioms": {"mul": axiom_report(cls, "mul", workers=workers)},
    }
    if cls.has_op("add"):
        out["axioms"]["add"] = axiom_report(cls, "add", workers=workers)
        out["characteristic"] = cls.characteristic()
    out["semifield"] = semifield_verdict(cls)
    if cls.n <= element_cap:
        specials = find_special_elements(cls, with_orders=True)
        out["elements"] = specials
        out["power_return"] = [
            {"class": ent["x"], "k": ent["return_exponent"]}
            for ent in specials.get("element_orders", [])]
    else:
        out["elements_note"] = (
            f"per-class element report skipped above {element_cap} classes")
    return out
