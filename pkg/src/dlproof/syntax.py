"""Abstract syntax for the ELH/ALCH concept language.

Expressions are immutable and kept in a canonical form at construction
time: conjunction/disjunction argument lists are flattened, duplicate-free
and sorted by a fixed total order (the functional-syntax serialization),
so structural equality coincides with logical-syntax equality up to
commutativity and idempotence of the n-ary connectives.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .errors import DuplicateAxiomError

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")


class _Name(str):
    """Interned identifier; identity comparison agrees with string equality."""

    __slots__ = ()
    _pool: dict

    def __new__(cls, value):
        pool = cls._pool
        cached = pool.get(value)
        if cached is not None:
            return cached
        if not _NAME_RE.fullmatch(value):
            raise ValueError(f"invalid name: {value!r}")
        obj = super().__new__(cls, value)
        pool[value] = obj
        return obj


class ConceptName(_Name):
    _pool = {}


class RoleName(_Name):
    _pool = {}


# --- concept expressions -------------------------------------------------


class ConceptExpr:
    """Base class; subclasses are frozen dataclasses."""

    __slots__ = ()

    def key(self) -> str:
        """Stable total-order key (the functional serialization)."""
        return _cached_key(self)

    def __lt__(self, other):
        return self.key() < other.key()


@dataclass(frozen=True, slots=True)
class Top(ConceptExpr):
    pass


@dataclass(frozen=True, slots=True)
class Bottom(ConceptExpr):
    pass


@dataclass(frozen=True, slots=True)
class Atomic(ConceptExpr):
    name: ConceptName


@dataclass(frozen=True, slots=True)
class Not(ConceptExpr):
    inner: ConceptExpr


@dataclass(frozen=True, slots=True)
class And(ConceptExpr):
    args: tuple

    def __post_init__(self):
        _check_nary(self.args, And)


@dataclass(frozen=True, slots=True)
class Or(ConceptExpr):
    args: tuple

    def __post_init__(self):
        _check_nary(self.args, Or)


@dataclass(frozen=True, slots=True)
class Exists(ConceptExpr):
    role: RoleName
    filler: ConceptExpr


@dataclass(frozen=True, slots=True)
class Forall(ConceptExpr):
    role: RoleName
    filler: ConceptExpr


TOP = Top()
BOTTOM = Bottom()


def _check_nary(args, cls):
    if len(args) < 2:
        raise ValueError(f"{cls.__name__} needs at least 2 arguments")
    keys = [a.key() for a in args]
    if keys != sorted(keys):
        raise ValueError(f"{cls.__name__} arguments not in canonical order")
    if len(set(keys)) != len(keys):
        raise ValueError(f"{cls.__name__} arguments contain duplicates")
    if any(isinstance(a, cls) for a in args):
        raise ValueError(f"directly nested {cls.__name__} must be flattened")


def atom(name: str) -> Atomic:
    return Atomic(ConceptName(name))


def conj(args: Iterable[ConceptExpr]) -> ConceptExpr:
    """Canonical n-ary conjunction: flatten, dedupe, sort; unit collapses."""
    flat = []
    for a in args:
        flat.extend(a.args if isinstance(a, And) else (a,))
    uniq = sorted(set(flat), key=lambda e: e.key())
    if not uniq:
        return TOP
    if len(uniq) == 1:
        return uniq[0]
    return And(tuple(uniq))


def disj(args: Iterable[ConceptExpr]) -> ConceptExpr:
    """Canonical n-ary disjunction, dual of conj."""
    flat = []
    for a in args:
        flat.extend(a.args if isinstance(a, Or) else (a,))
    uniq = sorted(set(flat), key=lambda e: e.key())
    if not uniq:
        return BOTTOM
    if len(uniq) == 1:
        return uniq[0]
    return Or(tuple(uniq))


def exists(role: str, filler: ConceptExpr) -> Exists:
    return Exists(RoleName(role), filler)


def forall(role: str, filler: ConceptExpr) -> Forall:
    return Forall(RoleName(role), filler)


# --- axioms and ontologies -------------------------------------------------


class Axiom:
    __slots__ = ()

    def key(self) -> str:
        return _cached_key(self)

    def __lt__(self, other):
        return self.key() < other.key()


@lru_cache(maxsize=None)
def _cached_key(x) -> str:
    if isinstance(x, Axiom):
        return render_axiom(x, "functional")
    return _render_functional(x)


@dataclass(frozen=True, slots=True)
class ConceptInclusion(Axiom):
    lhs: ConceptExpr
    rhs: ConceptExpr

    @property
    def is_atomic_ci(self) -> bool:
        return isinstance(self.lhs, Atomic) and isinstance(self.rhs, Atomic)


@dataclass(frozen=True, slots=True)
class RoleInclusion(Axiom):
    sub: RoleName
    sup: RoleName

    @property
    def is_atomic_ci(self) -> bool:
        return False


def ci(lhs: ConceptExpr, rhs: ConceptExpr) -> ConceptInclusion:
    return ConceptInclusion(lhs, rhs)


def ri(sub: str, sup: str) -> RoleInclusion:
    return RoleInclusion(RoleName(sub), RoleName(sup))


class Fragment(str, Enum):
    ELH = "ELH"
    ALCH = "ALCH"
    OTHER = "OTHER"


class Ontology:
    """Ordered, duplicate-free list of axioms with a stable insertion order."""

    __slots__ = ("name", "_axioms", "_index")

    def __init__(self, axioms: Iterable[Axiom] = (), name: str = "ontology"):
        self.name = name
        self._axioms = tuple(axioms)
        self._index = {}
        for i, a in enumerate(self._axioms):
            if a in self._index:
                raise DuplicateAxiomError(render_axiom(a, "functional"))
            self._index[a] = i

    @property
    def axioms(self) -> tuple:
        return self._axioms

    def __len__(self):
        return len(self._axioms)

    def __iter__(self):
        return iter(self._axioms)

    def __contains__(self, axiom):
        return axiom in self._index

    def __eq__(self, other):
        return isinstance(other, Ontology) and set(self._axioms) == set(other._axioms)

    def __hash__(self):
        return hash(frozenset(self._axioms))

    def __repr__(self):
        return f"Ontology({self.name!r}, {len(self._axioms)} axioms)"

    def position(self, axiom) -> int:
        return self._index[axiom]

    def without(self, axiom) -> "Ontology":
        return Ontology((a for a in self._axioms if a != axiom), name=self.name)

    def restricted_to(self, axioms) -> "Ontology":
        keep = set(axioms)
        return Ontology((a for a in self._axioms if a in keep), name=self.name)

    def fragment(self) -> Fragment:
        for a in self._axioms:
            if isinstance(a, ConceptInclusion):
                if _has_non_elh(a.lhs) or _has_non_elh(a.rhs):
                    return Fragment.ALCH
        return Fragment.ELH

    def signature(self) -> "Signature":
        return signature_of(self)


def ontology(axioms: Iterable[Axiom], name: str = "ontology") -> Ontology:
    """Build an ontology, silently dropping duplicate axioms."""
    seen = set()
    out = []
    for a in axioms:
        if a not in seen:
            seen.add(a)
            out.append(a)
    return Ontology(out, name=name)


def _has_non_elh(expr) -> bool:
    if isinstance(expr, (Not, Or, Forall)):
        return True
    if isinstance(expr, And):
        return any(_has_non_elh(a) for a in expr.args)
    if isinstance(expr, Exists):
        return _has_non_elh(expr.filler)
    return False


# --- signatures -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Signature:
    concept_names: frozenset
    role_names: frozenset

    def __or__(self, other):
        return Signature(self.concept_names | other.concept_names,
                         self.role_names | other.role_names)

    def __and__(self, other):
        return Signature(self.concept_names & other.concept_names,
                         self.role_names & other.role_names)

    def __le__(self, other):
        return (self.concept_names <= other.concept_names
                and self.role_names <= other.role_names)

    def __len__(self):
        return len(self.concept_names) + len(self.role_names)

    def __bool__(self):
        return bool(self.concept_names) or bool(self.role_names)

    def tagged(self) -> frozenset:
        """Names as (kind, name) pairs; keeps concept/role namespaces apart."""
        return frozenset({("concept", n) for n in self.concept_names}
                         | {("role", n) for n in self.role_names})


Signature.EMPTY = Signature(frozenset(), frozenset())


def sig(concepts=(), roles=()) -> Signature:
    return Signature(frozenset(ConceptName(c) for c in concepts),
                     frozenset(RoleName(r) for r in roles))


def signature_of(x) -> Signature:
    """Exactly the names syntactically occurring in x."""
    concepts, roles = set(), set()
    _collect(x, concepts, roles)
    return Signature(frozenset(concepts), frozenset(roles))


def _collect(x, concepts, roles):
    if isinstance(x, Ontology):
        for a in x:
            _collect(a, concepts, roles)
    elif isinstance(x, ConceptInclusion):
        _collect(x.lhs, concepts, roles)
        _collect(x.rhs, concepts, roles)
    elif isinstance(x, RoleInclusion):
        roles.add(x.sub)
        roles.add(x.sup)
    elif isinstance(x, Atomic):
        concepts.add(x.name)
    elif isinstance(x, Not):
        _collect(x.inner, concepts, roles)
    elif isinstance(x, (And, Or)):
        for a in x.args:
            _collect(a, concepts, roles)
    elif isinstance(x, (Exists, Forall)):
        roles.add(x.role)
        _collect(x.filler, concepts, roles)
    elif isinstance(x, (Top, Bottom)):
        pass
    else:
        raise TypeError(f"cannot take signature of {x!r}")


# --- rendering ---------------------------------------------------------------


def render_concept(expr, style: str = "functional") -> str:
    if style == "functional":
        return _render_functional(expr)
    if style == "pretty":
        return _render_pretty(expr)
    raise ValueError(f"unknown style: {style}")


def _render_functional(e) -> str:
    if isinstance(e, Top):
        return "owl:Thing"
    if isinstance(e, Bottom):
        return "owl:Nothing"
    if isinstance(e, Atomic):
        return str(e.name)
    if isinstance(e, Not):
        return f"ObjectComplementOf({_render_functional(e.inner)})"
    if isinstance(e, And):
        return "ObjectIntersectionOf(" + " ".join(_render_functional(a) for a in e.args) + ")"
    if isinstance(e, Or):
        return "ObjectUnionOf(" + " ".join(_render_functional(a) for a in e.args) + ")"
    if isinstance(e, Exists):
        return f"ObjectSomeValuesFrom({e.role} {_render_functional(e.filler)})"
    if isinstance(e, Forall):
        return f"ObjectAllValuesFrom({e.role} {_render_functional(e.filler)})"
    raise TypeError(f"not a concept: {e!r}")


def _render_pretty(e) -> str:
    if isinstance(e, Top):
        return "⊤"
    if isinstance(e, Bottom):
        return "⊥"
    if isinstance(e, Atomic):
        return str(e.name)
    if isinstance(e, Not):
        return "¬" + _pretty_sub(e.inner)
    if isinstance(e, (And, Or)):
        sep = " ⊓ " if isinstance(e, And) else " ⊔ "
        return sep.join(_pretty_sub(a) for a in e.args)
    if isinstance(e, Exists):
        return f"∃{e.role}.{_pretty_sub(e.filler)}"
    if isinstance(e, Forall):
        return f"∀{e.role}.{_pretty_sub(e.filler)}"
    raise TypeError(f"not a concept: {e!r}")


def _pretty_sub(e) -> str:
    s = _render_pretty(e)
    if isinstance(e, (And, Or)):
        return f"({s})"
    return s


def render_axiom(a, style: str = "functional") -> str:
    if isinstance(a, ConceptInclusion):
        if style == "functional":
            return f"SubClassOf({_render_functional(a.lhs)} {_render_functional(a.rhs)})"
        return f"{_render_pretty(a.lhs)} ⊑ {_render_pretty(a.rhs)}"
    if isinstance(a, RoleInclusion):
        if style == "functional":
            return f"SubObjectPropertyOf({a.sub} {a.sup})"
        return f"{a.sub} ⊑ {a.sup}"
    raise TypeError(f"not an axiom: {a!r}")


def render_ontology(o: Ontology, style: str = "functional") -> str:
    return "\n".join(render_axiom(a, style) for a in o) + ("\n" if len(o) else "")


# --- structural helpers -----------------------------------------------------


def subexpressions(x) -> set:
    """All concept subexpressions occurring in x (axiom, ontology or concept)."""
    out = set()
    _subs(x, out)
    return out


def _subs(x, out):
    if isinstance(x, Ontology):
        for a in x:
            _subs(a, out)
    elif isinstance(x, ConceptInclusion):
        _subs(x.lhs, out)
        _subs(x.rhs, out)
    elif isinstance(x, RoleInclusion):
        pass
    elif isinstance(x, ConceptExpr):
        out.add(x)
        if isinstance(x, Not):
            _subs(x.inner, out)
        elif isinstance(x, (And, Or)):
            for a in x.args:
                _subs(a, out)
        elif isinstance(x, (Exists, Forall)):
            _subs(x.filler, out)
    else:
        raise TypeError(f"no subexpressions for {x!r}")


def concept_size(e) -> int:
    """Symbol occurrences in a concept: names, constants and connectives."""
    if isinstance(e, (Top, Bottom, Atomic)):
        return 1
    if isinstance(e, Not):
        return 1 + concept_size(e.inner)
    if isinstance(e, (And, Or)):
        return (len(e.args) - 1) + sum(concept_size(a) for a in e.args)
    if isinstance(e, (Exists, Forall)):
        return 2 + concept_size(e.filler)
    raise TypeError(f"not a concept: {e!r}")


def axiom_weight(a) -> int:
    """Symbol occurrences in an axiom, counting the inclusion connective."""
    if isinstance(a, ConceptInclusion):
        return concept_size(a.lhs) + 1 + concept_size(a.rhs)
    if isinstance(a, RoleInclusion):
        return 3
    raise TypeError(f"not an axiom: {a!r}")


def negate(e) -> ConceptExpr:
    """Negation normal form of the complement of e."""
    if isinstance(e, Top):
        return BOTTOM
    if isinstance(e, Bottom):
        return TOP
    if isinstance(e, Atomic):
        return Not(e)
    if isinstance(e, Not):
        return nnf(e.inner)
    if isinstance(e, And):
        return disj([negate(a) for a in e.args])
    if isinstance(e, Or):
        return conj([negate(a) for a in e.args])
    if isinstance(e, Exists):
        return Forall(e.role, negate(e.filler))
    if isinstance(e, Forall):
        return Exists(e.role, negate(e.filler))
    raise TypeError(f"not a concept: {e!r}")


def nnf(e) -> ConceptExpr:
    """Push negations down to concept names."""
    if isinstance(e, (Top, Bottom, Atomic)):
        return e
    if isinstance(e, Not):
        return negate(e.inner)
    if isinstance(e, And):
        return conj([nnf(a) for a in e.args])
    if isinstance(e, Or):
        return disj([nnf(a) for a in e.args])
    if isinstance(e, Exists):
        return Exists(e.role, nnf(e.filler))
    if isinstance(e, Forall):
        return Forall(e.role, nnf(e.filler))
    raise TypeError(f"not a concept: {e!r}")


def simplify_concept(e: ConceptExpr) -> ConceptExpr:
    """Apply unit/complement rewrites bottom-up until fixpoint."""
    if isinstance(e, (Top, Bottom, Atomic)):
        return e
    if isinstance(e, Not):
        inner = simplify_concept(e.inner)
        if isinstance(inner, Top):
            return BOTTOM
        if isinstance(inner, Bottom):
            return TOP
        if isinstance(inner, Not):
            return inner.inner
        return Not(inner)
    if isinstance(e, And):
        args = [simplify_concept(a) for a in e.args]
        if any(isinstance(a, Bottom) for a in args):
            return BOTTOM
        args = [a for a in args if not isinstance(a, Top)]
        return conj(args)
    if isinstance(e, Or):
        args = [simplify_concept(a) for a in e.args]
        if any(isinstance(a, Top) for a in args):
            return TOP
        args = [a for a in args if not isinstance(a, Bottom)]
        return disj(args)
    if isinstance(e, Exists):
        filler = simplify_concept(e.filler)
        if isinstance(filler, Bottom):
            return BOTTOM
        return Exists(e.role, filler)
    if isinstance(e, Forall):
        filler = simplify_concept(e.filler)
        if isinstance(filler, Top):
            return TOP
        return Forall(e.role, filler)
    raise TypeError(f"not a concept: {e!r}")


def role_closure(o: Ontology) -> dict:
    """Reflexive-transitive closure of the told role hierarchy.

    Maps each role occurring in o to the set of its (told) super-roles,
    including itself.
    """
    roles = signature_of(o).role_names
    direct = {r: {r} for r in roles}
    for a in o:
        if isinstance(a, RoleInclusion):
            direct.setdefault(a.sub, {a.sub}).add(a.sup)
            direct.setdefault(a.sup, {a.sup})
    closure = {r: set(sups) for r, sups in direct.items()}
    changed = True
    while changed:
        changed = False
        for r in closure:
            extra = set()
            for s in closure[r]:
                extra |= closure.get(s, {s})
            if not extra <= closure[r]:
                closure[r] |= extra
                changed = True
    return {r: frozenset(s) for r, s in closure.items()}
