"""Finite algebraic structures and exhaustive axiom analysis.

A FiniteStructure is an ordered carrier of hashable elements together
with one or two binary operations (mul, and optionally add).  Cayley
tables are integer index tables built lazily; an entry of -1 marks a
product that falls outside the carrier (non-closure).  All axiom checks
are exhaustive and vectorized over the tables, and every negative
verdict carries the first counterexample in carrier order.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import MissingTable, NotIntervalCarrier, TooLarge
from .intervals import NaturalInterval
from .scalars import ModDomain

# Hard cap for building a table one element pair at a time in Python.
PY_TABLE_CAP = 2048
# Above this carrier size the n^3 scans (associativity, distributivity)
# are refused rather than silently taking minutes.
CUBIC_SCAN_CAP = 700
# Elements scanned per chunk in the n^3 checks (rows of the outer index).
_BLOCK_ENTRIES = 1 << 22


class FiniteStructure:
    """Ordered carrier with lazy Cayley tables.

    mul/add are element-level callables; they may produce values outside
    the carrier (recorded as -1 in the tables).  `fast_table`, when
    given, is a callable op-name -> ndarray used to build tables without
    the quadratic Python loop; `tables` seeds the cache directly.
    """

    def __init__(self, elements, mul=None, add=None, *, name="",
                 kind="generic", domain=None, flavor=None,
                 parse_element=None, fast_table=None, tables=None,
                 table_cap=PY_TABLE_CAP):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("carrier contains duplicate elements")
        self.mul_fn = mul
        self.add_fn = add
        self.name = name
        self.kind = kind
        self.domain = domain
        self.flavor = flavor
        self.parse_element = parse_element
        self.fast_table = fast_table
        self.table_cap = table_cap
        self._tables = dict(tables) if tables else {}

    @property
    def n(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<structure {self.name or self.kind}: {self.n} elements>"

    def label(self, i):
        return str(self.elements[i])

    def labels(self, indices):
        return [self.label(i) for i in indices]

    def op_fn(self, op):
        fn = self.mul_fn if op == "mul" else self.add_fn
        if fn is None:
            raise MissingTable(f"structure {self.name!r} has no {op} operation")
        return fn

    def has_op(self, op):
        return (self.mul_fn if op == "mul" else self.add_fn) is not None

    def apply(self, op, x, y):
        """Raw operation on elements; the result may leave the carrier."""
        return self.op_fn(op)(x, y)

    def table(self, op):
        t = self._tables.get(op)
        if t is not None:
            return t
        self.op_fn(op)  # raise MissingTable early
        if self.fast_table is not None:
            t = self.fast_table(op)
        if t is None or self.fast_table is None:
            if self.n > self.table_cap:
                raise TooLarge(
                    f"{self.n}x{self.n} {op} table exceeds the build cap "
                    f"({self.table_cap})")
            t = self._build_table(op)
        self._tables[op] = t
        return t

    def _build_table(self, op):
        f = self.op_fn(op)
        idx = self.index
        n = self.n
        t = np.empty((n, n), dtype=np.int32)
        for i, x in enumerate(self.elements):
            row = t[i]
            for j, y in enumerate(self.elements):
                row[j] = idx.get(f(x, y), -1)
        return t

    # ------------------------------------------------------------------
    # axiom checks (exhaustive, first counterexample in carrier order)

    def closed(self, op):
        t = self.table(op)
        bad = np.argwhere(t < 0)
        if bad.size:
            i, j = bad[0]
            return False, (int(i), int(j))
        return True, None

    def commutative(self, op):
        t = self.table(op)
        diff = np.argwhere(t != t.T)
        if diff.size:
            i, j = diff[0]
            return False, (int(i), int(j))
        return True, None

    def associative(self, op, workers=1):
        """(x∘y)∘z = x∘(y∘z) over all triples; requires a closed op."""
        ok, wit = self.closed(op)
        if not ok:
            return None, wit
        t = self.table(op)
        n = self.n
        if n > CUBIC_SCAN_CAP:
            raise TooLarge(
                f"associativity scan over {n}^3 triples refused "
                f"(cap {CUBIC_SCAN_CAP})")
        block = max(1, _BLOCK_ENTRIES // max(1, n * n))

        def scan(lo):
            hi = min(n, lo + block)
            left = t[t[lo:hi], :]
            right = t[lo:hi][:, t]
            diff = np.argwhere(left != right)
            if diff.size:
                a, b, c = diff[0]
                return (int(lo + a), int(b), int(c))
            return None

        wit = _first_hit(range(0, n, block), scan, workers)
        return (wit is None), wit

    def identity_index(self, op):
        t = self.table(op)
        ar = np.arange(self.n)
        hits = np.where((t == ar).all(axis=1) & (t.T == ar).all(axis=1))[0]
        return int(hits[0]) if hits.size else None

    def absorbing_index(self, op):
        t = self.table(op)
        for i in range(self.n):
            if (t[i] == i).all() and (t[:, i] == i).all():
                return i
        return None

    def inverses(self, op):
        """Does every element have a two-sided inverse for the identity?"""
        e = self.identity_index(op)
        if e is None:
            return None, None
        t = self.table(op)
        m = (t == e)
        have = (m & m.T).any(axis=1)
        missing = np.where(~have)[0]
        if missing.size:
            return False, int(missing[0])
        return True, None

    def distributive(self, workers=1):
        """x(y+z) = xy+xz and (y+z)x = yx+zx over all triples."""
        for op in ("add", "mul"):
            ok, wit = self.closed(op)
            if not ok:
                return None, None
        m = self.table("mul")
        a = self.table("add")
        left = _left_distrib_witness(m, a, workers)
        if left is not None:
            return False, ("left",) + left
        right = _left_distrib_witness(m.T, a, workers)
        if right is not None:
            x, y, z = right
            return False, ("right", y, z, x)
        return True, None

    # ------------------------------------------------------------------

    def neg_index(self):
        """Map i -> index of the additive inverse, or None."""
        z = self.identity_index("add")
        if z is None:
            return None
        t = self.table("add")
        m = (t == z)
        if not m.any(axis=1).all():
            return None
        return np.argmax(m, axis=1)

    def power_index(self, i, k, op="mul"):
        t = self.table(op)
        p = i
        for _ in range(k - 1):
            p = int(t[p, i])
            if p < 0:
                raise MissingTable("power left the carrier")
        return p

    def characteristic(self):
        """Least k >= 1 with k-fold sum of the identity zero; 0 if none."""
        one = self.identity_index("mul")
        zero = self.identity_index("add")
        if one is None or zero is None:
            return None
        t = self.table("add")
        acc = one
        for k in range(1, self.n + 1):
            if acc == zero:
                return k
            acc = int(t[acc, one])
        return 0


def _first_hit(keys, fn, workers):
    """Run fn over keys in order, return the first non-None result."""
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for res in pool.map(fn, keys):
                if res is not None:
                    return res
        return None
    for k in keys:
        res = fn(k)
        if res is not None:
            return res
    return None


def _left_distrib_witness(m, a, workers=1):
    n = m.shape[0]
    if n > CUBIC_SCAN_CAP:
        raise TooLarge(
            f"distributivity scan over {n}^3 triples refused "
            f"(cap {CUBIC_SCAN_CAP})")
    block = max(1, _BLOCK_ENTRIES // max(1, n * n))

    def scan(lo):
        hi = min(n, lo + block)
        lhs = m[lo:hi][:, a]
        rhs = a[m[lo:hi, :, None], m[lo:hi, None, :]]
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            x, y, z = diff[0]
            return (int(lo + x), int(y), int(z))
        return None

    return _first_hit(range(0, n, block), scan, workers)


# ----------------------------------------------------------------------
# reports

def axiom_report(s, op, workers=1):
    """Serializable exhaustive report for one operation."""
    rep = {"op": op}
    closed, cw = s.closed(op)
    rep["closed"] = closed
    if not closed:
        x, y = cw
        rep["closed_counterexample"] = [s.label(x), s.label(y)]
        rep["associative"] = None
    else:
        try:
            assoc, aw = s.associative(op, workers=workers)
        except TooLarge:
            assoc, aw = None, None
            rep["associative_note"] = "skipped: carrier too large"
        rep["associative"] = assoc
        if assoc is False:
            rep["associative_counterexample"] = s.labels(aw)
    comm, pw = s.commutative(op)
    rep["commutative"] = comm
    if not comm:
        rep["commutative_counterexample"] = s.labels(pw)
    e = s.identity_index(op)
    rep["identity"] = s.label(e) if e is not None else None
    inv, miss = s.inverses(op)
    rep["inverses_all"] = inv
    if inv is False:
        rep["inverses_counterexample"] = s.label(miss)
    z = s.absorbing_index(op)
    rep["absorbing"] = s.label(z) if z is not None else None
    return rep


def ring_report(s, workers=1):
    rep = {
        "add": axiom_report(s, "add", workers=workers),
        "mul": axiom_report(s, "mul", workers=workers),
    }
    try:
        dist, dw = s.distributive(workers=workers)
    except TooLarge:
        dist, dw = None, None
        rep["distributive_note"] = "skipped: carrier too large"
    rep["distributive"] = dist
    if dist is False:
        side, x, y, z = dw
        rep["distributive_counterexample"] = {
            "side": side, "triple": s.labels((x, y, z))}
    return rep


def is_group(s, op="mul", workers=1):
    closed, _ = s.closed(op)
    if not closed:
        return False
    assoc, _ = s.associative(op, workers=workers)
    if not assoc:
        return False
    if s.identity_index(op) is None:
        return False
    inv, _ = s.inverses(op)
    return bool(inv)


def is_ring(s, workers=1):
    if not (s.has_op("add") and s.has_op("mul")):
        return False
    if not is_group(s, "add", workers=workers):
        return False
    comm, _ = s.commutative("add")
    if not comm:
        return False
    closed, _ = s.closed("mul")
    if not closed:
        return False
    assoc, _ = s.associative("mul", workers=workers)
    if not assoc:
        return False
    dist, _ = s.distributive(workers=workers)
    return bool(dist)


def is_field(s, workers=1):
    if not is_ring(s, workers=workers):
        return False
    comm, _ = s.commutative("mul")
    if not comm:
        return False
    one = s.identity_index("mul")
    zero = s.identity_index("add")
    if one is None or one == zero:
        return False
    t = s.table("mul")
    m = (t == one)
    have = (m & m.T).any(axis=1)
    have[zero] = True
    return bool(have.all())


def classify(s, workers=1):
    """Human-readable classification tags for the carrier."""
    tags = []
    for op, noun in (("add", "additive"), ("mul", "multiplicative")):
        if not s.has_op(op):
            continue
        closed, _ = s.closed(op)
        if not closed:
            tags.append(f"{noun} operation not closed")
            continue
        assoc, _ = s.associative(op, workers=workers)
        if not assoc:
            tags.append(f"{noun} operation not associative")
            continue
        word = "semigroup"
        if s.identity_index(op) is not None:
            word = "monoid"
            inv, _ = s.inverses(op)
            if inv:
                word = "group"
        comm, _ = s.commutative(op)
        if comm:
            word = ("abelian " if word == "group" else "commutative ") + word
        tags.append(f"{noun} {word}")
    if s.has_op("add") and s.has_op("mul") and is_ring(s, workers=workers):
        name = "ring"
        comm, _ = s.commutative("mul")
        if comm:
            name = "commutative " + name
        if s.identity_index("mul") is not None:
            name += " with unity"
        tags.append(name)
        if is_field(s, workers=workers):
            tags.append("field")
    return tags


# ----------------------------------------------------------------------
# special elements

def _zero_index(s):
    """The zero used by divisor/nilpotent searches."""
    if s.has_op("add"):
        z = s.identity_index("add")
        if z is not None:
            return z
    if s.has_op("mul"):
        return s.absorbing_index("mul")
    return None


def find_special_elements(s, with_orders=True):
    """Zero divisors, idempotents, nilpotents, units, orders, characteristic.

    Conventions: zero divisors and nilpotents exclude zero itself;
    a nilpotency index is the least k with x^k = 0.
    """
    t = s.table("mul")
    n = s.n
    z = _zero_index(s)
    rep = {}

    if z is None:
        rep["zero"] = None
        rep["zero_divisors"] = []
        rep["s_zero_divisors"] = []
        rep["nilpotents"] = []
    else:
        rep["zero"] = s.label(z)
        annih = (t == z)
        annih[:, z] = False
        annih[z, :] = False
        zd = []
        for i in range(n):
            if i == z:
                continue
            row = annih[i] | annih[:, i]
            j = int(np.argmax(row)) if row.any() else None
            if j is not None:
                zd.append({"x": s.label(i), "witness": s.label(j)})
        rep["zero_divisors"] = zd
        rep["s_zero_divisors"] = _s_zero_divisors(s, t, z)
        nil = []
        for i in range(n):
            if i == z:
                continue
            p, k, seen = i, 1, {i}
            while True:
                p = int(t[p, i])
                k += 1
                if p == z:
                    nil.append({"x": s.label(i), "index": k})
                    break
                if p < 0 or p in seen:
                    break
                seen.add(p)
        rep["nilpotents"] = nil

    idem = np.where(np.diagonal(t) == np.arange(n))[0]
    rep["idempotents"] = s.labels(idem)

    one = s.identity_index("mul")
    rep["one"] = s.label(one) if one is not None else None
    units = []
    if one is not None:
        m = (t == one)
        both = m & m.T
        for i in range(n):
            if both[i].any():
                units.append({"x": s.label(i),
                              "inverse": s.label(int(np.argmax(both[i])))})
    rep["units"] = units

    rep["characteristic"] = s.characteristic() if s.has_op("add") else None
    if with_orders:
        rep["element_orders"] = _element_orders(s, one, z)
    return rep


def _s_zero_divisors(s, t, z):
    """Witnessed quadruples: x,y nonzero, xy=0, and a,b outside {0,x,y}
    with xa=0, yb=0 but ab != 0.  Pairs reported once with x <= y."""
    out = []
    n = s.n
    ann = [np.where(t[i] == z)[0] for i in range(n)]
    for x in range(n):
        if x == z:
            continue
        for y in ann[x]:
            y = int(y)
            if y == z or y < x:
                continue
            excl = {z, x, y}
            a_set = [a for a in ann[x] if int(a) not in excl]
            b_set = [b for b in ann[y] if int(b) not in excl]
            if not a_set or not b_set:
                continue
            sub = t[np.ix_(a_set, b_set)] != z
            hits = np.argwhere(sub)
            if hits.size:
                ai, bi = hits[0]
                out.append({"x": s.label(x), "y": s.label(y),
                            "a": s.label(int(a_set[ai])),
                            "b": s.label(int(b_set[bi]))})
    return out


def _element_orders(s, one, zero):
    """Two notions per element, labeled: order relative to the identity
    (least k with x^k = 1, when it exists) and the return exponent
    (least k > 1 with x^k = x, when it exists)."""
    t = s.table("mul")
    add = s.table("add") if s.has_op("add") else None
    out = []
    for i in range(s.n):
        entry = {"x": s.label(i)}
        p, k, seen = i, 1, {i: 1}
        ident_order = 1 if i == one else None
        return_exp = None
        while ident_order is None or return_exp is None:
            p = int(t[p, i])
            k += 1
            if p < 0:
                break
            if p == one and ident_order is None:
                ident_order = k
            if p == i and return_exp is None:
                return_exp = k
            if p in seen:
                break
            seen[p] = k
        entry["identity_order"] = ident_order
        entry["return_exponent"] = return_exp
        if add is not None:
            z = s.identity_index("add")
            q, m = i, 1
            while q != z and m <= s.n:
                q = int(add[q, i])
                m += 1
            entry["additive_order"] = m if q == z else None
        out.append(entry)
    return out


# ----------------------------------------------------------------------
# subset verification (element-level; no carrier enumeration needed)

def check_subset_group(elems, mul):
    """Exhaustively verify that elems forms a group under mul."""
    k = len(elems)
    if k == 0:
        return False, {"reason": "empty"}
    pos = {e: i for i, e in enumerate(elems)}
    if len(pos) != k:
        return False, {"reason": "duplicate elements"}
    prod = [[None] * k for _ in range(k)]
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            r = mul(x, y)
            if r not in pos:
                return False, {"reason": "not closed",
                               "witness": (str(x), str(y), str(r))}
            prod[i][j] = pos[r]
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if prod[prod[a][b]][c] != prod[a][prod[b][c]]:
                    return False, {"reason": "not associative",
                                   "witness": (str(elems[a]), str(elems[b]),
                                               str(elems[c]))}
    e = None
    for i in range(k):
        if all(prod[i][j] == j and prod[j][i] == j for j in range(k)):
            e = i
            break
    if e is None:
        return False, {"reason": "no identity"}
    for i in range(k):
        if not any(prod[i][j] == e and prod[j][i] == e for j in range(k)):
            return False, {"reason": "missing inverse",
                           "witness": str(elems[i])}
    return True, {"identity": str(elems[e])}


def check_subset_field(elems, add, mul):
    """Exhaustively verify that elems forms a field under (add, mul)."""
    ok, info = check_subset_group(elems, add)
    if not ok:
        info["reason"] = "additive: " + info["reason"]
        return False, info
    pos = {e: i for i, e in enumerate(elems)}
    k = len(elems)
    zero = next(e for e in elems
                if all(add(e, x) == x for x in elems))
    if k < 2:
        return False, {"reason": "needs at least two elements"}
    for x in elems:
        for y in elems:
            if add(x, y) != add(y, x):
                return False, {"reason": "addition not commutative"}
            if mul(x, y) not in pos:
                return False, {"reason": "product leaves the subset",
                               "witness": (str(x), str(y))}
            if mul(x, y) != mul(y, x):
                return False, {"reason": "multiplication not commutative",
                               "witness": (str(x), str(y))}
    for x in elems:
        for y in elems:
            for z in elems:
                if mul(mul(x, y), z) != mul(x, mul(y, z)):
                    return False, {"reason": "multiplication not associative"}
                if mul(x, add(y, z)) != add(mul(x, y), mul(x, z)):
                    return False, {"reason": "not distributive",
                                   "witness": (str(x), str(y), str(z))}
    one = None
    for e in elems:
        if e != zero and all(mul(e, x) == x for x in elems):
            one = e
            break
    if one is None:
        return False, {"reason": "no multiplicative identity"}
    nonzero = [e for e in elems if e != zero]
    for x in nonzero:
        if not any(mul(x, y) == one for y in nonzero):
            return False, {"reason": "missing multiplicative inverse",
                           "witness": str(x)}
    return True, {"zero": str(zero), "identity": str(one)}


# ----------------------------------------------------------------------
# substructures and S-structure searches (subsets richer than their ambient)

def inherited_substructure(s):
    """The degenerate diagonal {[a,a]} with the ambient operations."""
    if s.kind != "interval":
        raise NotIntervalCarrier(
            f"inherited substructure needs an interval carrier, got {s.kind}")
    diag = [e for e in s.elements if e.is_degenerate]
    return FiniteStructure(
        diag, mul=s.mul_fn, add=s.add_fn,
        name=f"inherited({s.name})", kind="interval",
        domain=s.domain, flavor=s.flavor, parse_element=s.parse_element)


def maximal_subgroups(s):
    """For each multiplicative idempotent e: the group of invertible
    elements of the local monoid {x : ex = xe = x} with identity e."""
    t = s.table("mul")
    n = s.n
    idem = np.where(np.diagonal(t) == np.arange(n))[0]
    out = []
    for e in idem:
        e = int(e)
        corner = np.where((t[e] == np.arange(n)) &
                          (t[:, e] == np.arange(n)))[0]
        sub = t[np.ix_(corner, corner)]
        m = (sub == e)
        good = (m & m.T).any(axis=1)
        members = [int(corner[i]) for i in range(len(corner)) if good[i]]
        out.append({"idempotent": s.label(e),
                    "order": len(members),
                    "members": s.labels(members)})
    return out


def thm_unit_square_witness(s):
    """The canonical {1, [1,n-1], [n-1,1], [n-1,n-1]} subset for interval
    carriers over Z_n, when it lies inside the carrier and is proper."""
    if s.kind != "interval" or not isinstance(s.domain, ModDomain):
        return None
    d = s.domain
    nmod = d.n
    if nmod < 3:
        return None
    u = (nmod - 1) % nmod
    f = s.flavor
    cand = [NaturalInterval(d, 1, 1, f), NaturalInterval(d, 1, u, f),
            NaturalInterval(d, u, 1, f), NaturalInterval(d, u, u, f)]
    if len(set(cand)) != 4 or any(c not in s.index for c in cand):
        return None
    if len(cand) >= s.n:
        return None
    ok, info = check_subset_group(cand, s.mul_fn)
    if not ok:
        return None
    cand.sort(key=lambda e: s.index[e])
    return {"members": [str(c) for c in cand], "identity": info["identity"]}


def is_s_semigroup(s, workers=1):
    """True iff a proper subset with >= 2 elements is a group under mul.

    The canonical unit-square witness is tried first (it needs no Cayley
    table, so it works on carriers too large to tabulate); the general
    search walks maximal subgroups at every idempotent.
    """
    w = thm_unit_square_witness(s)
    if w is not None:
        return True, w
    for grp in maximal_subgroups(s):
        if 2 <= grp["order"] < s.n:
            return True, {"members": grp["members"],
                          "identity": grp["idempotent"]}
    return False, None


def _additive_span(s, i):
    """Indices of the cyclic additive span of element i (contains zero)."""
    t = s.table("add")
    z = s.identity_index("add")
    if z is None:
        return None
    span = {z}
    p = i
    while p not in span:
        span.add(p)
        p = int(t[p, i])
        if p < 0:
            return None
    return frozenset(span)


def is_s_ring(s, enumerate_cap=256, workers=1):
    """True iff some proper subset is a field under the induced operations.

    Search order: additive spans of e*g with e a multiplicative idempotent
    and g a carrier element — degenerate (diagonal) pairs first on
    interval carriers — then, for carriers of at most enumerate_cap
    elements, additive spans of single elements and of pairs.
    """
    if not (s.has_op("add") and s.has_op("mul")):
        return False, None
    t = s.table("mul")
    at = s.table("add")
    z = s.identity_index("add")
    if z is None:
        return False, None
    n = s.n
    idem = [int(i) for i in np.where(np.diagonal(t) == np.arange(n))[0]]

    def diag(i):
        e = s.elements[i]
        return isinstance(e, NaturalInterval) and e.is_degenerate

    seen = set()

    def try_span(span):
        if span is None or span in seen:
            return None
        seen.add(span)
        if not 2 <= len(span) < n:
            return None
        members = sorted(span)
        elems = [s.elements[i] for i in members]
        ok, info = check_subset_field(elems, s.add_fn, s.mul_fn)
        if ok:
            return {"members": s.labels(members), "identity": info["identity"],
                    "order": len(members), "member_indices": members}
        return None

    phases = []
    if s.kind == "interval":
        phases.append(([e for e in idem if diag(e)],
                       [i for i in range(n) if diag(i)]))
    phases.append((idem, range(n)))
    for es, gs in phases:
        for e in es:
            row = t[e]
            for g in gs:
                prod = int(row[g])
                if prod < 0:
                    continue
                hit = try_span(_additive_span(s, prod))
                if hit:
                    return True, hit
    if n <= enumerate_cap:
        spans = []
        for i in range(n):
            sp = _additive_span(s, i)
            if sp is not None:
                spans.append(sp)
        singles = sorted(set(spans), key=sorted)
        for sp in singles:
            hit = try_span(sp)
            if hit:
                return True, hit
        for a in range(len(singles)):
            for b in range(a + 1, len(singles)):
                joined = _close_under_add(s, singles[a] | singles[b])
                hit = try_span(joined)
                if hit:
                    return True, hit
    return False, None


def _close_under_add(s, seed):
    t = s.table("add")
    cur = np.array(sorted(seed), dtype=np.int64)
    while True:
        sums = t[np.ix_(cur, cur)].ravel()
        if (sums < 0).any():
            return None
        new = np.union1d(cur, sums)
        if len(new) == len(cur):
            return frozenset(int(i) for i in cur)
        cur = new


def is_strict_semiring(s):
    """No two nonzero elements sum to the additive identity."""
    z = s.identity_index("add")
    if z is None:
        return None, None
    t = s.table("add")
    m = (t == z)
    m[z, :] = False
    m[:, z] = False
    bad = np.argwhere(m)
    if bad.size:
        i, j = bad[0]
        return False, (s.label(int(i)), s.label(int(j)))
    return True, None


# ----------------------------------------------------------------------

def analyze_structure(s, workers=1, with_orders=None):
    """Full deterministic report: axioms, elements, substructures."""
    if with_orders is None:
        with_orders = s.n <= 512
    report = {
        "schema": "natint/1",
        "spec": s.name,
        "order": s.n,
        "axioms": {},
        "elements": {},
        "substructures": {},
        "witnesses": {},
    }
    if s.has_op("add"):
        report["axioms"]["add"] = axiom_report(s, "add", workers=workers)
    if s.has_op("mul"):
        report["axioms"]["mul"] = axiom_report(s, "mul", workers=workers)
    if s.has_op("add") and s.has_op("mul"):
        try:
            dist, dw = s.distributive(workers=workers)
        except TooLarge:
            dist, dw = None, None
        report["axioms"]["distributive"] = dist
        if dist is False:
            side, x, y, z = dw
            report["axioms"]["distributive_counterexample"] = {
                "side": side, "triple": s.labels((x, y, z))}
    report["classification"] = classify(s, workers=workers)
    if s.has_op("mul"):
        report["elements"] = find_special_elements(s, with_orders=with_orders)
        found, wit = is_s_semigroup(s, workers=workers)
        report["substructures"]["s_semigroup"] = found
        if wit:
            report["witnesses"]["s_semigroup"] = wit
        report["substructures"]["maximal_subgroups"] = maximal_subgroups(s)
    if s.kind == "interval":
        inh = inherited_substructure(s)
        report["substructures"]["inherited"] = {
            "order": inh.n, "members": [str(e) for e in inh.elements]}
    if s.has_op("add") and s.has_op("mul"):
        found, wit = is_s_ring(s, workers=workers)
        report["substructures"]["s_ring"] = found
        if wit:
            report["witnesses"]["s_ring"] = wit
        strict, sw = is_strict_semiring(s)
        report["substructures"]["strict_semiring"] = strict
        if sw:
            report["witnesses"]["strict_counterexample"] = list(sw)
    return report
