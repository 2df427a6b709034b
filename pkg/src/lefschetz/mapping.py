"""Mapping classes at (homology transvection, boundary permutation) resolution.

Words in Dehn twists about catalog curves, plus explicit bundle generators,
are evaluated to a pair (integer matrix preserving the intersection pairing,
permutation of the boundary circles).  Words act right to left as maps, so
``evaluate(w1 + w2) = evaluate(w1) o evaluate(w2)``.

The twist about a curve c acts on homology by the transvection

    x  |->  x + h * <c, x> * c

with h = +1 for a right-handed twist and -1 for a left-handed one.  The sign
convention is a recorded constant of the package: with <a_i, b_i> = +1 the
right twist about a_1 sends b_1 to b_1 + a_1.

Deciding whether a set of twists generates the full mapping class group is
out of reach at this resolution, so the surjectivity oracle returns one of
three verdicts: Certified (the set contains a recognized generating
configuration), Obstructed (a finite computation rules surjectivity out), or
Unknown.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import factorial

from .curves import Curve, enumerate_classes, nonseparating_curve
from .errors import CapacityError, InputError
from .homology import (
    Matrix,
    SurfaceSpec,
    Vector,
    mat_identity,
    mat_inverse_unimodular,
    mat_mul,
    mat_vec,
    pairing,
    pairing_matrix,
    preserves_pairing,
)

# ---------------------------------------------------------------------------
# permutations of boundary circles (0-based tuples)
# ---------------------------------------------------------------------------

Permutation = tuple[int, ...]


def perm_identity(n: int) -> Permutation:
    return tuple(range(n))


def perm_compose(s: Permutation, t: Permutation) -> Permutation:
    """(s o t)(i) = s(t(i)); apply t first."""
    return tuple(s[t[i]] for i in range(len(t)))


def perm_inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def check_perm(p: Permutation, n: int) -> None:
    if len(p) != n or sorted(p) != list(range(n)):
        raise InputError(f"{p} is not a permutation of {n} points")


# ---------------------------------------------------------------------------
# generators and words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistGen:
    """Dehn twist about a curve; handed is "right" or "left"."""

    curve: Curve
    handed: str = "right"

    def __post_init__(self) -> None:
        if self.handed not in ("right", "left"):
            raise InputError(f"bad handedness {self.handed!r}")

    @property
    def surface(self) -> SurfaceSpec:
        return self.curve.surface

    def inverse(self) -> "TwistGen":
        return TwistGen(self.curve, "left" if self.handed == "right" else "right")


@dataclass(frozen=True)
class BundleGen:
    """Monodromy of a fiber-bundle loop: matrix plus boundary permutation.

    The matrix must preserve the pairing and act on the boundary classes
    d_1, ..., d_b compatibly with the permutation.
    """

    surface: SurfaceSpec
    matrix: Matrix
    perm: Permutation
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        object.__setattr__(self, "perm", tuple(self.perm))
        r = self.surface.rank
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise InputError(f"matrix must be {r}x{r} for {self.surface}")
        check_perm(self.perm, self.surface.boundary)
        if not preserves_pairing(self.surface, self.matrix):
            raise InputError("bundle generator must preserve the pairing form")
        for j in range(1, self.surface.boundary + 1):
            src = _boundary_class(self.surface, j)
            dst = _boundary_class(self.surface, self.perm[j - 1] + 1)
            if mat_vec(self.matrix, src) != dst:
                raise InputError(
                    f"matrix moves boundary class {j} off d_{self.perm[j - 1] + 1}")

    def inverse(self) -> "BundleGen":
        return BundleGen(
            self.surface,
            mat_inverse_unimodular(self.matrix),
            perm_inverse(self.perm),
            label=f"{self.label}^-1" if self.label else "",
        )


def _boundary_class(surface: SurfaceSpec, j: int) -> Vector:
    """Class of the j-th boundary circle, 1 <= j <= b (d_b is minus the sum)."""
    b = surface.boundary
    coords = [0] * surface.rank
    if j < b:
        coords[surface.delta_index(j)] = 1
    else:
        for k in range(1, b):
            coords[surface.delta_index(k)] = -1
    return tuple(coords)


def boundary_permutation_gen(
    surface: SurfaceSpec, perm: Permutation, label: str = ""
) -> BundleGen:
    """Bundle generator permuting boundary circles and fixing the handles.

    Sends d_j to d_{perm(j)} and each a_i, b_i to itself; any permutation of
    the boundary is realized by some homeomorphism, so this is always legal.
    """
    check_perm(perm, surface.boundary)
    g, b = surface.genus, surface.boundary
    cols: list[Vector] = []
    for k in range(2 * g):
        cols.append(surface.basis_vector(k))
    for j in range(1, b):
        cols.append(_boundary_class(surface, perm[j - 1] + 1))
    matrix = tuple(tuple(col[i] for col in cols) for i in range(surface.rank))
    return BundleGen(surface, matrix, perm, label)


@dataclass(frozen=True)
class Letter:
    """One word letter: a generator or its formal inverse (power -1)."""

    gen: TwistGen | BundleGen
    power: int = 1

    def __post_init__(self) -> None:
        if self.power not in (1, -1):
            raise InputError("letter power must be +-1")

    @property
    def surface(self) -> SurfaceSpec:
        return self.gen.surface

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.power)


@dataclass(frozen=True)
class MCWord:
    """Word of generators on one surface, acting right to left."""

    surface: SurfaceSpec
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        for let in self.letters:
            if let.surface != self.surface:
                raise InputError("word letters live on different surfaces")

    def __mul__(self, other: "MCWord") -> "MCWord":
        if self.surface != other.surface:
            raise InputError("cannot concatenate words on different surfaces")
        return MCWord(self.surface, self.letters + other.letters)

    def inverse(self) -> "MCWord":
        return MCWord(self.surface, tuple(l.inverse() for l in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)


def twist_word(*twists: TwistGen) -> MCWord:
    if not twists:
        raise InputError("empty twist list; build MCWord(surface) directly")
    return MCWord(twists[0].surface, tuple(Letter(t) for t in twists))


@dataclass(frozen=True)
class HomPermRep:
    """Evaluated mapping class: pairing-preserving matrix and boundary permutation."""

    surface: SurfaceSpec
    matrix: Matrix
    perm: Permutation

    def compose(self, other: "HomPermRep") -> "HomPermRep":
        if self.surface != other.surface:
            raise InputError("cannot compose over different surfaces")
        return HomPermRep(
            self.surface,
            mat_mul(self.matrix, other.matrix),
            perm_compose(self.perm, other.perm),
        )

    @property
    def is_identity(self) -> bool:
        return self.matrix == mat_identity(self.surface.rank) and (
            self.perm == perm_identity(self.surface.boundary))


def twist_matrix(c: Curve, handed: str = "right") -> Matrix:
    """Homology transvection of the twist about c."""
    if handed not in ("right", "left"):
        raise InputError(f"bad handedness {handed!r}")
    h = 1 if handed == "right" else -1
    surface = c.surface
    r = surface.rank
    j = pairing_matrix(surface)
    v = c.hom
    # row w with w_k = sum_m v_m J_{m k}; the transvection is I + h * outer(v, w)
    w = tuple(sum(v[m] * j[m][k] for m in range(r)) for k in range(r))
    return tuple(
        tuple((1 if i == k else 0) + h * v[i] * w[k] for k in range(r))
        for i in range(r)
    )


def _letter_rep(letter: Letter) -> tuple[Matrix, Permutation]:
    gen = letter.gen
    if isinstance(gen, TwistGen):
        handed = gen.handed
        if letter.power == -1:
            handed = "left" if handed == "right" else "right"
        return twist_matrix(gen.curve, handed), perm_identity(gen.surface.boundary)
    if letter.power == -1:
        gen = gen.inverse()
    return gen.matrix, gen.perm


def evaluate(w: MCWord) -> HomPermRep:
    """Evaluate a word; the empty word is the identity.

    The result always preserves the pairing form (asserted), and twist-only
    words have identity boundary permutation because twists fix the boundary
    pointwise.
    """
    surface = w.surface
    matrix = mat_identity(surface.rank)
    perm = perm_identity(surface.boundary)
    for letter in w.letters:
        m, p = _letter_rep(letter)
        matrix = mat_mul(matrix, m)
        perm = perm_compose(perm, p)
    rep = HomPermRep(surface, matrix, perm)
    if not preserves_pairing(surface, matrix):
        raise AssertionError("evaluated word does not preserve the pairing form")
    return rep


def act_on_curve(w: MCWord | HomPermRep, c: Curve) -> Curve:
    """Transport a curve by a mapping class.

    The homeomorphism type is invariant, so only the homology class moves.
    The label rides along unchanged: it names the curve the result is the
    image of, and keeping it path-independent makes move round trips
    byte-stable under serialization.
    """
    rep = evaluate(w) if isinstance(w, MCWord) else w
    if rep.surface != c.surface:
        raise InputError("word and curve live on different surfaces")
    new_hom = mat_vec(rep.matrix, c.hom)
    return Curve(c.surface, c.cls, new_hom, c.label)


# ---------------------------------------------------------------------------
# permutation groups: surjectivity onto the full symmetric group
# ---------------------------------------------------------------------------

def _perm_group_order(gens: list[Permutation], n: int) -> int:
    """Order of the generated subgroup, by a deterministic stabilizer chain.

    Sims's method with full Schreier-generator verification: generators are
    sifted to the level they stabilize down to, and the chain is reprocessed
    until every Schreier generator sifts to the identity.  Plenty fast at
    the desk-scale degrees allowed here.
    """
    ident = perm_identity(n)
    levels: list[dict] = []  # {"base": point, "gens": [residues placed here]}

    def effective_gens(i: int) -> list[Permutation]:
        return [g for level in levels[i:] for g in level["gens"]]

    def orbit(i: int) -> dict[int, Permutation]:
        base = levels[i]["base"]
        gens_i = effective_gens(i)
        orb = {base: ident}
        frontier = [base]
        while frontier:
            frontier.sort()
            pt = frontier.pop(0)
            rep = orb[pt]
            for g in gens_i:
                img = g[pt]
                if img not in orb:
                    orb[img] = perm_compose(g, rep)
                    frontier.append(img)
        return orb

    def sift(p: Permutation, start: int) -> tuple[Permutation | None, int]:
        for i in range(start, len(levels)):
            orb = orbit(i)
            img = p[levels[i]["base"]]
            if img not in orb:
                return p, i
            p = perm_compose(perm_inverse(orb[img]), p)
        if p == ident:
            return None, len(levels)
        return p, len(levels)

    def place(p: Permutation, start: int) -> bool:
        residue, lvl = sift(p, start)
        if residue is None:
            return False
        if lvl == len(levels):
            base = next(i for i in range(n) if residue[i] != i)
            levels.append({"base": base, "gens": []})
        levels[lvl]["gens"].append(residue)
        return True

    for g in gens:
        check_perm(g, n)
        place(g, 0)

    dirty = bool(levels)
    while dirty:
        dirty = False
        for i in range(len(levels)):
            orb = orbit(i)
            for pt in sorted(orb):
                rep = orb[pt]
                for g in effective_gens(i):
                    schreier = perm_compose(
                        perm_inverse(orb[g[pt]]), perm_compose(g, rep))
                    if schreier != ident and place(schreier, i + 1):
                        dirty = True
            if dirty:
                break

    order = 1
    for i in range(len(levels)):
        order *= len(orbit(i))
    return order


def perm_group_surjective(perms: list[Permutation], b: int) -> bool:
    """True iff the permutations generate the full symmetric group on b points."""
    if b < 1:
        raise InputError("need at least one boundary circle")
    if b > 10:
        raise CapacityError(f"permutation degree {b} exceeds the desk-scale bound 10")
    for p in perms:
        check_perm(p, b)
    return _perm_group_order(list(perms), b) == factorial(b)


# ---------------------------------------------------------------------------
# mod-p symplectic closure
# ---------------------------------------------------------------------------

def symplectic_group_order(g: int, p: int) -> int:
    """|Sp(2g, p)| = p^(g^2) * prod_{i=1..g} (p^(2i) - 1)."""
    order = p ** (g * g)
    for i in range(1, g + 1):
        order *= p ** (2 * i) - 1
    return order


def _symplectic_block_mod(m: Matrix, g: int, p: int) -> Matrix:
    return tuple(tuple(m[i][j] % p for j in range(2 * g)) for i in range(2 * g))


def _closure(gens: set[Matrix], p: int, cap: int) -> set[Matrix] | None:
    """BFS closure of a matrix set under multiplication mod p; None if > cap."""
    if not gens:
        gens = set()
    n = len(next(iter(gens))) if gens else 0
    ident = mat_identity(n)
    seen = {ident} | set(gens)
    frontier = list(gens)
    while frontier:
        if len(seen) > cap:
            return None
        nxt = []
        for a in frontier:
            for g in gens:
                prod = tuple(
                    tuple(sum(x * y for x, y in zip(row, col)) % p
                          for col in zip(*g))
                    for row in a
                )
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# twist catalog: recognized generating configurations
# ---------------------------------------------------------------------------

def twist_catalog(surface: SurfaceSpec) -> tuple[Curve, ...]:
    """Catalog configuration whose twists generate the mapping class group.

    Available for b = 1, g >= 1 and for the closed torus.  For g >= 2 this is
    the classical (2g+1)-curve configuration: a chain

        b1 - a1 - c1 - a2 - c2 - ... - c_{g-1} - a_g

    together with one extra curve b2 meeting only a2.  The homology table is

        a_i -> alpha_i,   b1 -> beta_1,   b2 -> beta_2,
        c_i -> beta_i + beta_{i+1}

    which realizes the intersection pattern algebraically (consecutive
    configuration neighbors pair to +-1, all other pairs to 0), consists of
    primitive non-separating classes, and spans the full symplectic lattice.
    For g = 1 the catalog is the pair a -> alpha_1, b -> beta_1.
    """
    g, b = surface.genus, surface.boundary
    if g < 1 or b > 1:
        raise InputError(f"no twist catalog for {surface}")
    alpha = lambda i: surface.basis_vector(surface.alpha_index(i))
    beta = lambda i: surface.basis_vector(surface.beta_index(i))
    if g == 1:
        return (
            nonseparating_curve(surface, alpha(1), "a"),
            nonseparating_curve(surface, beta(1), "b"),
        )
    curves = [
        nonseparating_curve(surface, beta(1), "b1"),
        nonseparating_curve(surface, beta(2), "b2"),
    ]
    for i in range(1, g + 1):
        curves.append(nonseparating_curve(surface, alpha(i), f"a{i}"))
    for i in range(1, g):
        chain = tuple(x + y for x, y in zip(beta(i), beta(i + 1)))
        curves.append(nonseparating_curve(surface, chain, f"c{i}"))
    return tuple(curves)


def catalog_adjacency(surface: SurfaceSpec) -> dict[tuple[str, str], int]:
    """Pairing table of the catalog, keyed by sorted label pairs (nonzero only)."""
    curves = twist_catalog(surface)
    table = {}
    for i, c in enumerate(curves):
        for d in curves[i + 1:]:
            v = pairing(surface, c.hom, d.hom)
            if v != 0:
                table[tuple(sorted((c.label, d.label)))] = v
    return table


def _load_catalog_file() -> list[dict]:
    with resources.files("lefschetz.data").joinpath("twist_catalog.json").open(
        "r", encoding="utf-8"
    ) as fh:
        return json.load(fh)


def packaged_catalog() -> list[dict]:
    """The catalog entries shipped as package data (small genera, pinned)."""
    return _load_catalog_file()


# ---------------------------------------------------------------------------
# the surjectivity oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurjectivityVerdict:
    """Three-valued answer: "certified", "obstructed" or "unknown"."""

    status: str
    detail: str = ""

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def obstructed(self) -> bool:
        return self.status == "obstructed"


def _matches_catalog(twists: list[TwistGen], surface: SurfaceSpec) -> bool:
    """Twist set contains every catalog curve, matched by (type, class).

    Labels and handedness are ignored (a twist and its inverse generate the
    same subgroup) and classes match up to overall sign (the curve is
    unoriented).
    """
    have = set()
    for t in twists:
        have.add((t.curve.cls, t.curve.hom))
        have.add((t.curve.cls, tuple(-x for x in t.curve.hom)))
    try:
        catalog = twist_catalog(surface)
    except InputError:
        return False
    return all((c.cls, c.hom) in have for c in catalog)


def mcg_surjectivity_oracle(
    twists: list[TwistGen],
    surface: SurfaceSpec,
    primes: tuple[int, ...] = (2, 3, 5),
    closure_cap: int = 200_000,
) -> SurjectivityVerdict:
    """Decide, when possible, whether the twists generate the mapping class group.

    Certified is only returned with a recognized generating-set certificate:

      * the twist set contains the catalog configuration for (g, b=1), or
        the two catalog curves for the torus cases (1,1) and (1,0);
      * the mapping class group is trivial (disk or sphere fiber).

    Obstructed is only returned with a finite computed obstruction:

      * the homology images mod p generate a proper subgroup of the full
        symplectic group Sp(2g, p) for some p (the closure is run with a
        size cap and only a *completed* closure counts);
      * b <= 1 and some curve type is missed by the twist curves, which a
        surjective monodromy would have to realize.

    Anything else is Unknown: homology data alone cannot certify
    surjectivity of the full group.
    """
    for t in twists:
        if t.surface != surface:
            raise InputError("twist on the wrong surface")
    g, b = surface.genus, surface.boundary

    if g >= 1 and b <= 1 and _matches_catalog(twists, surface):
        return SurjectivityVerdict(
            "certified", f"contains the {2 * g + 1 if g >= 2 else 2}-twist catalog configuration")
    if g == 0 and b <= 1:
        return SurjectivityVerdict("certified", "trivial mapping class group")

    if g >= 1:
        for p in primes:
            gens = {
                _symplectic_block_mod(twist_matrix(t.curve, t.handed), g, p)
                for t in twists
            }
            closed = _closure(gens, p, closure_cap)
            if closed is None:
                continue  # inconclusive at this prime
            full = symplectic_group_order(g, p)
            if len(closed) < full:
                return SurjectivityVerdict(
                    "obstructed",
                    f"mod-{p} symplectic closure has order {len(closed)} < {full}")

    if b <= 1:
        present = {t.curve.cls for t in twists}
        missing = [c for c in enumerate_classes(surface) if c not in present]
        if missing:
            return SurjectivityVerdict(
                "obstructed",
                f"curve type {missing[0]} is realized by no twist curve")

    return SurjectivityVerdict("unknown", "no certificate and no finite obstruction")
