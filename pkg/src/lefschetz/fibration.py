"""Lefschetz fibrations over bounded base surfaces, as monodromy data.

A fibration is (fiber, base, ordered signed vanishing cycles, bundle
generators).  The cycle order is the order of a Hurwitz system of meridians;
the bundle generators are the monodromies of the base's free loops (none over
a disk).  Only allowable fibrations are representable: every cycle class is
essential, which also forces relative minimality.

Total-space invariants come from the handle decomposition: the total space
over a disk is (disk x fiber) with one 2-handle per vanishing cycle, so the
boundary matrix has one column per cycle class, plus one zero column for the
fiber 2-cell when the fiber is closed.

Stabilization attaches a fiber 1-handle together with one new vanishing
cycle crossing it once; destabilization removes both.  At homology
resolution the removable configurations are recognized by a sufficient
coefficient criterion on a single basis generator, documented at
:func:`destabilize`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .curves import Curve, CurveClass, enumerate_classes, subset_from_class
from .errors import InputError, NotApplicable, Unsupported
from .homology import (
    Matrix,
    SurfaceSpec,
    Vector,
    in_radical,
    mat_from_columns,
    mat_identity,
    mat_mul,
    mat_vec,
    smith_normal_form,
    vec_gcd,
)
from .mapping import (
    BundleGen,
    HomPermRep,
    Letter,
    MCWord,
    SurjectivityVerdict,
    TwistGen,
    act_on_curve,
    evaluate,
    mcg_surjectivity_oracle,
    perm_group_surjective,
    perm_identity,
    twist_matrix,
)


@dataclass(frozen=True)
class BaseSurface:
    """Compact oriented base surface with nonempty boundary."""

    genus: int
    boundary: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise InputError("base genus must be >= 0")
        if self.boundary < 1:
            raise InputError("base surfaces must have nonempty boundary")

    @property
    def free_loop_count(self) -> int:
        """Free generators of the fundamental group: 2h + d - 1."""
        return 2 * self.genus + self.boundary - 1


DISK = BaseSurface(0, 1)
ANNULUS = BaseSurface(0, 2)


@dataclass(frozen=True)
class SignedCycle:
    """Vanishing cycle with the sign of its singular point."""

    curve: Curve
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise InputError("cycle sign must be +-1")


@dataclass(frozen=True)
class LefschetzFibration:
    fiber: SurfaceSpec
    base: BaseSurface
    cycles: tuple[SignedCycle, ...]
    bundle: tuple[BundleGen, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycles", tuple(self.cycles))
        object.__setattr__(self, "bundle", tuple(self.bundle))
        for c in self.cycles:
            if c.curve.surface != self.fiber:
                raise InputError("vanishing cycle on the wrong surface")
        if len(self.bundle) != self.base.free_loop_count:
            raise InputError(
                f"base has {self.base.free_loop_count} free loops but "
                f"{len(self.bundle)} bundle generators were given")
        for bg in self.bundle:
            if bg.surface != self.fiber:
                raise InputError("bundle generator on the wrong surface")

    @property
    def size(self) -> int:
        return len(self.cycles)

    def signs(self) -> tuple[int, ...]:
        return tuple(c.sign for c in self.cycles)

    def twist_gens(self) -> list[TwistGen]:
        return [
            TwistGen(c.curve, "right" if c.sign > 0 else "left")
            for c in self.cycles
        ]


def _require_disk(f: LefschetzFibration, what: str) -> None:
    if f.base != DISK:
        raise Unsupported(f"{what} is only implemented over the disk")


def twist_product(f: LefschetzFibration) -> Matrix:
    """Ordered product of the signed twist matrices of the cycles."""
    acc = mat_identity(f.fiber.rank)
    for c in f.cycles:
        acc = mat_mul(acc, twist_matrix(c.curve, "right" if c.sign > 0 else "left"))
    return acc


# ---------------------------------------------------------------------------
# standard fibrations over the disk
# ---------------------------------------------------------------------------

def _catalog_fibration(fiber: SurfaceSpec, signs: tuple[int, ...]) -> LefschetzFibration:
    from .mapping import twist_catalog

    curves = twist_catalog(fiber)
    if len(signs) != len(curves):
        raise InputError("sign count does not match the catalog")
    cycles = tuple(SignedCycle(c, s) for c, s in zip(curves, signs))
    return LefschetzFibration(fiber, DISK, cycles)


def u_g1(g: int) -> LefschetzFibration:
    """The (2g+1)-cycle fibration over the disk with fiber of genus g, one
    boundary circle, and signs (-, +, +...+, -, +...+) on the catalog
    configuration (b1 and c1 negative)."""
    if g < 2:
        raise InputError("u_g1 needs genus >= 2; use u_11 for genus one")
    signs = [1] * (2 * g + 1)
    signs[0] = -1          # b1
    signs[g + 2] = -1      # c1
    return _catalog_fibration(SurfaceSpec(g, 1), tuple(signs))


def u_11() -> LefschetzFibration:
    """Two cycles (a+, b-) on the one-holed torus."""
    return _catalog_fibration(SurfaceSpec(1, 1), (1, -1))


def u_10() -> LefschetzFibration:
    """Two cycles (a+, b-) on the closed torus."""
    return _catalog_fibration(SurfaceSpec(1, 0), (1, -1))


def p_g(g: int) -> LefschetzFibration:
    """All-positive twists on the catalog configuration (fiber F_{g,1})."""
    if g < 1:
        raise InputError("p_g needs genus >= 1")
    fiber = SurfaceSpec(g, 1)
    count = 2 if g == 1 else 2 * g + 1
    return _catalog_fibration(fiber, (1,) * count)


_BUILDERS = {
    "u_11": lambda g: u_11(),
    "u_10": lambda g: u_10(),
    "u_g1": lambda g: u_g1(_need_g("u_g1", g)),
    "p_g": lambda g: p_g(_need_g("p_g", g)),
}


def _need_g(name: str, g: int | None) -> int:
    if g is None:
        raise InputError(f"builder {name} needs a genus parameter")
    return g


def build(name: str, g: int | None = None) -> LefschetzFibration:
    """Construct a named standard fibration ("u_11", "u_10", "u_g1", "p_g")."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise InputError(f"unknown fibration name {name!r}") from None
    return builder(g)


# ---------------------------------------------------------------------------
# total-space invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantReport:
    """Algebraic invariants of the total space of a fibration over the disk."""

    euler: int
    h1_free_rank: int
    h1_torsion: tuple[int, ...]
    h2_rank: int
    positive: int
    negative: int
    allowable: bool = True


def total_space_invariants(f: LefschetzFibration) -> InvariantReport:
    """Euler characteristic and H1, H2 of the total space over a disk.

    The boundary matrix of the 2-handles has one column per cycle class; a
    closed fiber contributes one extra zero column for its top cell.
    """
    _require_disk(f, "total_space_invariants")
    fiber = f.fiber
    cols: list[Vector] = [c.curve.hom for c in f.cycles]
    if fiber.boundary == 0:
        cols.append(fiber.zero())
    boundary = mat_from_columns(cols, fiber.rank)
    snf = smith_normal_form(boundary)
    rank = sum(1 for d in snf.diagonal() if d != 0)
    torsion = tuple(d for d in snf.diagonal() if d > 1)
    euler = fiber.euler + len(f.cycles)
    report = InvariantReport(
        euler=euler,
        h1_free_rank=fiber.rank - rank,
        h1_torsion=torsion,
        h2_rank=len(cols) - rank,
        positive=sum(1 for c in f.cycles if c.sign > 0),
        negative=sum(1 for c in f.cycles if c.sign < 0),
    )
    assert report.h2_rank >= 0
    return report


# ---------------------------------------------------------------------------
# Hurwitz moves and global conjugation
# ---------------------------------------------------------------------------

def hurwitz_move(f: LefschetzFibration, i: int, direction: str) -> LefschetzFibration:
    """Elementary change of Hurwitz system at position i (1-based, i < n).

    R:  (c_i^e, c_{i+1}^d)  ->  (c_{i+1}^d, (t_{c_{i+1}}^{-d}(c_i))^e)
    L is the inverse move.  Either way the evaluated product of the signed
    twist matrices is unchanged.
    """
    if direction not in ("L", "R"):
        raise InputError(f"direction must be 'L' or 'R', not {direction!r}")
    n = f.size
    if not 1 <= i < n:
        raise InputError(f"move position {i} out of range 1..{n - 1}")
    cyc = list(f.cycles)
    left, right = cyc[i - 1], cyc[i]
    if direction == "R":
        # conjugate by the inverse twist of the right neighbor
        handed = "left" if right.sign > 0 else "right"
        rep = HomPermRep(
            f.fiber, twist_matrix(right.curve, handed), perm_identity(f.fiber.boundary))
        moved = SignedCycle(act_on_curve(rep, left.curve), left.sign)
        cyc[i - 1], cyc[i] = right, moved
    else:
        handed = "right" if left.sign > 0 else "left"
        rep = HomPermRep(
            f.fiber, twist_matrix(left.curve, handed), perm_identity(f.fiber.boundary))
        moved = SignedCycle(act_on_curve(rep, right.curve), right.sign)
        cyc[i - 1], cyc[i] = moved, left
    return replace(f, cycles=tuple(cyc))


def global_conjugate(f: LefschetzFibration, w: MCWord) -> LefschetzFibration:
    """Transport every cycle by w and conjugate the bundle generators."""
    if w.surface != f.fiber:
        raise InputError("conjugating word on the wrong surface")
    rep = evaluate(w)
    rep_inv = evaluate(w.inverse())
    cycles = tuple(SignedCycle(act_on_curve(rep, c.curve), c.sign) for c in f.cycles)
    bundle = tuple(
        BundleGen(
            f.fiber,
            mat_mul(rep.matrix, mat_mul(bg.matrix, rep_inv.matrix)),
            tuple(rep.perm[bg.perm[rep_inv.perm[k]]] for k in range(f.fiber.boundary)),
            bg.label,
        )
        for bg in f.bundle
    )
    return LefschetzFibration(f.fiber, f.base, cycles, bundle)


# ---------------------------------------------------------------------------
# stabilization and destabilization
# ---------------------------------------------------------------------------

def _match_separating_sides(
    sides: tuple[tuple[int, int], tuple[int, int]],
    subset_count: int,
    other_count: int,
    active_in_subset: bool,
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Assignments (active_side, passive_side) consistent with boundary counts.

    ``active`` is the side containing the boundary circles touched by the
    handle move; whether that is the recorded-subset side is told by
    ``active_in_subset``.
    """
    s1, s2 = sides
    active_count = subset_count if active_in_subset else other_count
    passive_count = other_count if active_in_subset else subset_count
    out = []
    for act, pas in ((s1, s2), (s2, s1)):
        if act[1] == active_count and pas[1] == passive_count:
            out.append((act, pas))
    # identical assignments carry no ambiguity
    dedup = []
    for a in out:
        if a not in dedup:
            dedup.append(a)
    return dedup


def _transport_separating(
    curve: Curve,
    new_surface: SurfaceSpec,
    new_hom: Vector,
    genus_delta: int,
    boundary_delta: int,
) -> Curve:
    """Move a separating curve's side data through a handle move.

    The side containing the affected boundary circles changes by
    (genus_delta, boundary_delta); the other side is untouched.  When the
    recorded unordered pair cannot be matched to the subset unambiguously the
    move is refused.
    """
    old_subset = curve.boundary_subset()
    assert old_subset is not None
    b = curve.surface.boundary
    active_in_subset = b in old_subset
    choices = _match_separating_sides(
        curve.cls.sides, len(old_subset), b - len(old_subset), active_in_subset)
    results = set()
    for act, pas in choices:
        new_g = act[0] + genus_delta
        new_b = act[1] + boundary_delta
        if new_g < 0 or new_b < 1:
            continue
        results.add(CurveClass.separating((new_g, new_b), pas))
    if len(results) != 1:
        raise NotApplicable(
            f"side data of separating cycle {curve.label or curve.hom} cannot "
            "be transported unambiguously at homology resolution")
    return Curve(new_surface, results.pop(), new_hom, curve.label)


def _transport_curve(
    curve: Curve,
    new_surface: SurfaceSpec,
    new_hom: Vector,
    genus_delta: int,
    boundary_delta: int,
) -> Curve:
    """Re-coordinatized curve after a stabilization move, with reclassification.

    A non-separating curve whose new class falls into the boundary lattice
    has become separating; its side data is recovered from the class when
    that is unambiguous (always so on a genus-zero result).
    """
    if not in_radical(new_surface, new_hom):
        if vec_gcd(new_hom) != 1:
            raise NotApplicable("transported class is imprimitive")
        return Curve(new_surface, CurveClass.nonseparating(), new_hom, curve.label)
    if curve.cls.is_separating:
        return _transport_separating(
            curve, new_surface, new_hom, genus_delta, boundary_delta)
    subset = subset_from_class(new_surface, new_hom)
    if subset is None:
        raise NotApplicable(
            "transported class is boundary-type but not a subset class")
    t = len(subset)
    g, b = new_surface.genus, new_surface.boundary
    candidates = {
        CurveClass.separating((x, t), (g - x, b - t)) for x in range(g + 1)
    }
    if len(candidates) != 1:
        raise NotApplicable(
            "genus split of a newly separating cycle is ambiguous")
    return Curve(new_surface, candidates.pop(), new_hom, curve.label)


def stabilize(f: LefschetzFibration, mode: str, sign: int = 1) -> LefschetzFibration:
    """Attach a fiber 1-handle and one new cycle crossing it once.

    boundary_up: both handle feet on the last boundary circle, which splits;
    the fiber goes (g, b) -> (g, b+1) and the new cycle is parallel to the
    split-off circle (class d_{b}, a separating curve).

    genus_up: feet on the last two boundary circles, which merge; the fiber
    goes (g, b) -> (g+1, b-1) and the new cycle is the new handle's
    longitude (class b_{g+1}).  Requires b >= 2.

    The total space is unchanged either way.
    """
    _require_disk(f, "stabilize")
    if sign not in (1, -1):
        raise InputError("sign must be +-1")
    g, b = f.fiber.genus, f.fiber.boundary
    if mode == "boundary_up":
        if b < 1:
            raise InputError("boundary_up needs a fiber with boundary")
        new_surface = SurfaceSpec(g, b + 1)

        def remap(v: Vector) -> Vector:
            return v + (0,)

        new_hom = new_surface.basis_vector(new_surface.rank - 1)
        new_cls = CurveClass.separating((0, 1), (g, b))
        genus_delta, boundary_delta = 0, 1
    elif mode == "genus_up":
        if b < 2:
            raise InputError("genus_up merges two boundary circles; need b >= 2")
        new_surface = SurfaceSpec(g + 1, b - 1)
        last_delta = 2 * g + (b - 2)
        for c in f.cycles:
            if c.curve.cls.is_separating and c.curve.hom[last_delta] != 0:
                # The merged circles sit on opposite sides, so the cycle
                # becomes non-separating.  Allowed only when the matching
                # destabilization can reclassify it unambiguously.
                t = len(c.curve.boundary_subset())
                candidates = {
                    CurveClass.separating((x, t), (g - x, b - t))
                    for x in range(g + 1)
                }
                if candidates != {c.curve.cls}:
                    raise NotApplicable(
                        f"cycle {c.curve.label or c.curve.hom} separates the "
                        "two circles being merged and could not be recovered")

        def remap(v: Vector) -> Vector:
            return v[: 2 * g] + (v[last_delta], 0) + v[2 * g: last_delta]

        new_hom = new_surface.basis_vector(new_surface.beta_index(g + 1))
        new_cls = CurveClass.nonseparating()
        genus_delta, boundary_delta = 1, -1
    else:
        raise InputError(f"unknown stabilization mode {mode!r}")

    cycles = [
        SignedCycle(
            _transport_curve(
                c.curve, new_surface, remap(c.curve.hom), genus_delta, boundary_delta),
            c.sign,
        )
        for c in f.cycles
    ]
    cycles.append(SignedCycle(Curve(new_surface, new_cls, new_hom, "stab"), sign))
    return LefschetzFibration(new_surface, DISK, tuple(cycles))


def destabilize(f: LefschetzFibration, generator_index: int) -> LefschetzFibration:
    """Remove a cancelling handle pair recognized on one basis generator.

    Applicability criterion (sufficient, not necessary): exactly one cycle
    has coefficient +-1 on the designated generator and every other cycle
    has coefficient 0 there.  That cycle is removed.  If the generator is an
    a_i/b_i the fiber loses the handle, (g, b) -> (g-1, b+1), and the
    surviving partner generator becomes the new last boundary class; if it
    is a d_j the j-th boundary circle merges with the last one,
    (g, b) -> (g, b-1).  Surviving classes are re-coordinatized by the
    inverse of the corresponding stabilization map, which leaves the
    total-space invariants unchanged.

    Raises NotApplicable when the criterion fails, when the fiber is closed
    (no destabilizing arc exists), or when a surviving separating cycle's
    side data cannot be transported unambiguously.
    """
    _require_disk(f, "destabilize")
    surface = f.fiber
    g, b = surface.genus, surface.boundary
    rank = surface.rank
    if not 0 <= generator_index < rank:
        raise InputError(f"generator index {generator_index} out of range 0..{rank - 1}")
    coeffs = [c.curve.hom[generator_index] for c in f.cycles]
    hits = [i for i, v in enumerate(coeffs) if v != 0]
    if len(hits) != 1 or abs(coeffs[hits[0]]) != 1:
        raise NotApplicable(
            f"generator {generator_index} is not crossed exactly once by "
            "exactly one cycle")
    removed = hits[0]

    if generator_index < 2 * g:
        if b < 1:
            raise NotApplicable("a closed fiber admits no destabilizing arc")
        pair = generator_index // 2
        partner = generator_index ^ 1
        new_surface = SurfaceSpec(g - 1, b + 1)

        def remap(v: Vector) -> Vector:
            out = [v[2 * q + s] for q in range(g) if q != pair for s in (0, 1)]
            out += list(v[2 * g:])
            out.append(v[partner])
            return tuple(out)

        genus_delta, boundary_delta = -1, 1
    else:
        j = generator_index - 2 * g + 1  # 1-based boundary class number
        new_surface = SurfaceSpec(g, b - 1)
        last_delta = 2 * g + (b - 2)

        def remap(v: Vector) -> Vector:
            vb = v[last_delta]
            out = list(v[: 2 * g])
            for k in range(1, b - 1):
                out.append(-vb if k == j else v[2 * g + k - 1] - vb)
            return tuple(out)

        genus_delta, boundary_delta = 0, -1

    cycles = []
    for idx, c in enumerate(f.cycles):
        if idx == removed:
            continue
        cycles.append(
            SignedCycle(
                _transport_curve(
                    c.curve, new_surface, remap(c.curve.hom),
                    genus_delta, boundary_delta),
                c.sign,
            )
        )
    return LefschetzFibration(new_surface, DISK, tuple(cycles))


@dataclass(frozen=True)
class ReduceResult:
    fibration: LefschetzFibration
    steps: int
    exhausted: bool


def reduce(f: LefschetzFibration, budget: int = 200) -> ReduceResult:
    """Deterministic search for a maximally destabilized fibration.

    Breadth-first over the states reachable by applicable destabilizations,
    expanding generator indices in ascending order (a greedy chain alone can
    dead-end: removing a middle handle may leave two cycles sharing the new
    boundary class).  Returns the discovered state with minimal fiber rank,
    then minimal cycle count, then earliest discovery; ``steps`` counts the
    destabilizations from the input to that state.  The budget bounds the
    number of successful destabilizations explored; if it runs out the best
    state found so far is returned flagged ``exhausted``.
    """
    seen = {f}
    queue: list[tuple[LefschetzFibration, int]] = [(f, 0)]
    best = (f.fiber.rank, f.size, 0, f, 0)
    edges = 0
    exhausted = False
    qi = 0
    while qi < len(queue) and not exhausted:
        state, depth = queue[qi]
        qi += 1
        for gi in range(state.fiber.rank):
            if edges >= budget:
                exhausted = True
                break
            try:
                child = destabilize(state, gi)
            except NotApplicable:
                continue
            edges += 1
            if child in seen:
                continue
            seen.add(child)
            queue.append((child, depth + 1))
            key = (child.fiber.rank, child.size, len(queue))
            if key < best[:3]:
                best = (*key, child, depth + 1)
    return ReduceResult(best[3], best[4], exhausted)


# ---------------------------------------------------------------------------
# pullbacks along meridian plans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PlanEntry:
    """One target meridian: source cycle, conjugating word, local degree."""

    source: int
    conjugator: MCWord
    local_degree: int = 1

    def __post_init__(self) -> None:
        if self.local_degree not in (1, -1):
            raise InputError("local degree must be +-1")


@dataclass(frozen=True)
class MeridianPlan:
    """Combinatorial u-regular map of the disk, one entry per target cycle."""

    entries: tuple[PlanEntry, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def is_immersion(self) -> bool:
        return all(e.local_degree == 1 for e in self.entries)


@dataclass(frozen=True)
class ImmersionWitness(MeridianPlan):
    """A meridian plan with every local degree +1 (orientation-preserving)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_immersion:
            raise InputError("an immersion witness needs all local degrees +1")


def identity_plan(u: LefschetzFibration) -> ImmersionWitness:
    empty = MCWord(u.fiber)
    return ImmersionWitness(tuple(PlanEntry(i, empty, 1) for i in range(u.size)))


def pullback(u: LefschetzFibration, plan: MeridianPlan) -> LefschetzFibration:
    """Pull back along the map encoded by the plan.

    Target cycle i is the source cycle plan[i].source transported by the
    conjugator, with sign multiplied by the local degree.  The monodromy
    factors through the source at the implemented resolution: the twist
    about each transported curve equals the conjugated source twist, which
    is asserted.
    """
    _require_disk(u, "pullback")
    cycles = []
    for e in plan.entries:
        if not 0 <= e.source < u.size:
            raise InputError(f"plan source {e.source} out of range")
        if e.conjugator.surface != u.fiber:
            raise InputError("plan conjugator on the wrong surface")
        src = u.cycles[e.source]
        rep = evaluate(e.conjugator)
        moved = act_on_curve(rep, src.curve)
        inv = evaluate(e.conjugator.inverse())
        conjugated = mat_mul(rep.matrix, mat_mul(twist_matrix(src.curve), inv.matrix))
        if twist_matrix(moved) != conjugated:
            raise AssertionError("monodromy does not factor through the source")
        cycles.append(SignedCycle(moved, e.local_degree * src.sign))
    return LefschetzFibration(u.fiber, DISK, tuple(cycles))


# ---------------------------------------------------------------------------
# universality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniversalityReport:
    """Condition flags and overall verdicts ("yes" / "no" / "unknown")."""

    cond_perm: bool
    cond_lef: SurjectivityVerdict
    cond2: bool
    cond2strong: bool
    universal: str
    strongly_universal: str


def _verdict(cond_perm: bool, lef: SurjectivityVerdict, cond_cls: bool) -> str:
    if not cond_perm or not cond_cls or lef.obstructed:
        return "no"
    if lef.certified:
        return "yes"
    return "unknown"


def universality_report(u: LefschetzFibration) -> UniversalityReport:
    """Check the characterization conditions on a fibration.

    cond_perm: the bundle generators' permutations generate the full
    symmetric group on the fiber's boundary circles (trivially true for
    b <= 1).  cond_lef: the three-verdict surjectivity oracle on the twist
    set.  cond2: every curve type of the fiber occurs among the cycles;
    cond2strong: with both signs.  A verdict is affirmative only when the
    oracle certifies, negative when any necessary condition fails, and
    unknown otherwise.
    """
    b = u.fiber.boundary
    if b <= 1:
        cond_perm = True
    else:
        cond_perm = perm_group_surjective([bg.perm for bg in u.bundle], b)
    cond_lef = mcg_surjectivity_oracle(u.twist_gens(), u.fiber)
    required = enumerate_classes(u.fiber)
    by_class: dict[CurveClass, set[int]] = {}
    for c in u.cycles:
        by_class.setdefault(c.curve.cls, set()).add(c.sign)
    cond2 = all(cls in by_class for cls in required)
    cond2strong = all(by_class.get(cls, set()) == {1, -1} for cls in required)
    return UniversalityReport(
        cond_perm=cond_perm,
        cond_lef=cond_lef,
        cond2=cond2,
        cond2strong=cond2strong,
        universal=_verdict(cond_perm, cond_lef, cond2),
        strongly_universal=_verdict(cond_perm, cond_lef, cond2 and cond2strong),
    )


# ---------------------------------------------------------------------------
# witness search
# ---------------------------------------------------------------------------

def _alphabet(u: LefschetzFibration) -> list[Letter]:
    """Twist letters over the source's distinct cycle curves, right then left."""
    seen = set()
    letters: list[Letter] = []
    for c in u.cycles:
        key = (c.curve.cls, c.curve.hom)
        if key in seen:
            continue
        seen.add(key)
        letters.append(Letter(TwistGen(c.curve, "right")))
        letters.append(Letter(TwistGen(c.curve, "left")))
    return letters


def substitution_witness(
    u: LefschetzFibration,
    f: LefschetzFibration,
    depth: int = 4,
) -> MeridianPlan | None:
    """Search for a meridian plan realizing f as a pullback of u.

    For each target cycle, conjugating words over the source's own twist
    letters (and inverses) are enumerated in deterministic length-then-lex
    order up to ``depth``, looking for an exact (type, class) match with a
    source cycle.  Sign-matching sources are preferred (local degree +1);
    otherwise an opposite-sign source is used with local degree -1.  The
    returned plan is verified by a pullback round trip and is an
    ImmersionWitness when every local degree is +1.  Returns None when some
    cycle stays unmatched within the depth bound.
    """
    if u.fiber != f.fiber:
        raise InputError("witness search needs a common fiber")
    _require_disk(u, "substitution_witness")
    _require_disk(f, "substitution_witness")
    if depth < 0:
        raise InputError("depth must be >= 0")

    letters = _alphabet(u)
    mats = [twist_matrix(l.gen.curve, l.gen.handed) for l in letters]
    targets = [(c.curve.cls, c.curve.hom, c.sign) for c in f.cycles]
    pref = [
        [j for j, s in enumerate(u.cycles) if s.sign == sign and s.curve.cls == cls]
        for cls, _, sign in targets
    ]
    alt = [
        [j for j, s in enumerate(u.cycles) if s.sign != sign and s.curve.cls == cls]
        for cls, _, sign in targets
    ]
    hit_pref: dict[int, tuple[tuple[int, ...], int]] = {}
    hit_alt: dict[int, tuple[tuple[int, ...], int]] = {}

    def visit(word: tuple[int, ...], matrix: Matrix) -> None:
        for i, (cls, hom, _) in enumerate(targets):
            if i not in hit_pref:
                for j in pref[i]:
                    if mat_vec(matrix, u.cycles[j].curve.hom) == hom:
                        hit_pref[i] = (word, j)
                        break
            if i not in hit_pref and i not in hit_alt:
                for j in alt[i]:
                    if mat_vec(matrix, u.cycles[j].curve.hom) == hom:
                        hit_alt[i] = (word, j)
                        break

    # Length-lexicographic: all words of length L before any of length L+1.
    for length in range(depth + 1):
        if _walk_level((), mat_identity(u.fiber.rank), length, mats, visit,
                       hit_pref, len(targets)):
            break

    entries = []
    for i in range(len(targets)):
        if i in hit_pref:
            word, j = hit_pref[i]
            degree = 1
        elif i in hit_alt:
            word, j = hit_alt[i]
            degree = -1
        else:
            return None
        conj = MCWord(u.fiber, tuple(letters[li] for li in word))
        entries.append(PlanEntry(j, conj, degree))
    plan_cls = ImmersionWitness if all(e.local_degree == 1 for e in entries) else MeridianPlan
    plan = plan_cls(tuple(entries))

    check = pullback(u, plan)
    for got, want in zip(check.cycles, f.cycles):
        if (got.curve.cls, got.curve.hom, got.sign) != (
            want.curve.cls, want.curve.hom, want.sign
        ):
            raise AssertionError("witness failed the pullback round trip")
    return plan


def _walk_level(word, matrix, remaining, mats, visit, hit_pref, n_targets) -> bool:
    """Visit all words of exactly ``remaining`` more letters, in lex order."""
    if remaining == 0:
        visit(word, matrix)
        return len(hit_pref) == n_targets
    for li, m in enumerate(mats):
        if _walk_level(word + (li,), mat_mul(matrix, m), remaining - 1,
                       mats, visit, hit_pref, n_targets):
            return True
    return False
