"""Finitely presented simplicial sets.

A presentation lists nondegenerate generators by dimension and a face table
giving each generator's codimension-1 faces in normal form.  Every simplex is
then a pair (generator, surjective operator) and the contravariant action is
computed by epi-mono splitting plus face-table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ops import (
    SimplicialOperator,
    all_epis,
    compose_ops,
    delta,
    ez_factorize,
    identity,
    sigma,
)


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Simplex:
    """A simplex in normal form: a generator degenerated along an epi.

    ``deg`` maps the simplex's own ordinal onto the generator's, so the
    dimension of the simplex is ``deg.domain_rank``.
    """

    gen: str
    deg: SimplicialOperator

    @property
    def dim(self) -> int:
        return self.deg.domain_rank

    @property
    def is_degenerate(self) -> bool:
        return not self.deg.is_identity

    def __repr__(self) -> str:
        if self.deg.is_identity:
            return f"<{self.gen}>"
        return f"<{self.gen}.{list(self.deg.images)}>"


@dataclass
class SSetPresentation:
    """Generators with a face table; dimensions are the dict keys."""

    generators: dict[int, tuple[str, ...]]
    faces: dict[str, tuple[Simplex, ...]]
    name: str = ""
    _dims: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._dims = {}
        for d, gens in self.generators.items():
            for g in gens:
                if g in self._dims:
                    raise PresentationError(f"duplicate generator name {g!r}")
                self._dims[g] = d
        for g, d in self._dims.items():
            if d == 0:
                if g in self.faces and self.faces[g]:
                    raise PresentationError(f"vertex {g!r} cannot have faces")
                continue
            fs = self.faces.get(g)
            if fs is None or len(fs) != d + 1:
                raise PresentationError(f"generator {g!r} needs {d + 1} faces")
            for f in fs:
                if f.gen not in self._dims:
                    raise PresentationError(f"face of {g!r} uses unknown generator {f.gen!r}")
                if f.dim != d - 1:
                    raise PresentationError(f"face {f!r} of {g!r} has wrong dimension")
        self._check_face_identities()

    def _check_face_identities(self) -> None:
        # d_i d_j = d_{j-1} d_i for i < j, evaluated through the face table
        for g, d in self._dims.items():
            if d < 2:
                continue
            top = Simplex(g, identity(d))
            for j in range(d + 1):
                for i in range(j):
                    lhs = self.act(self.act(top, delta(j, d)), delta(i, d - 1))
                    rhs = self.act(self.act(top, delta(i, d)), delta(j - 1, d - 1))
                    if lhs != rhs:
                        raise PresentationError(
                            f"face table of {g!r} breaks d_{i} d_{j} = d_{j - 1} d_{i}"
                        )

    def dim_of(self, gen: str) -> int:
        return self._dims[gen]

    def generator(self, gen: str) -> Simplex:
        return Simplex(gen, identity(self._dims[gen]))

    def face(self, gen: str, i: int) -> Simplex:
        return self.faces[gen][i]

    def normalize(self, gen: str, op: SimplicialOperator) -> Simplex:
        """The simplex gen . op in normal form."""
        if op.rank != self._dims[gen]:
            raise PresentationError(f"operator rank {op.rank} != dim of {gen!r}")
        epi, mono = ez_factorize(op)
        if mono.is_identity:
            return Simplex(gen, epi)
        # peel off the largest omitted vertex as a face lookup
        missing = max(set(range(mono.rank + 1)) - set(mono.images))
        rest = SimplicialOperator(
            mono.rank - 1, tuple(v if v < missing else v - 1 for v in mono.images)
        )
        f = self.face(gen, missing)
        inner = self.normalize(f.gen, compose_ops(f.deg, rest))
        return Simplex(inner.gen, compose_ops(inner.deg, epi))

    def act(self, s: Simplex, op: SimplicialOperator) -> Simplex:
        """The contravariant action s . op, in normal form."""
        return self.normalize(s.gen, compose_ops(s.deg, op))

    def max_gen_dim(self) -> int:
        return max(self.generators) if self.generators else -1

    def simplices(self, dim: int) -> list[Simplex]:
        """All simplices in dimension ``dim`` (degenerate ones included)."""
        out = []
        for d in sorted(self.generators):
            if d > dim:
                break
            for g in self.generators[d]:
                for e in all_epis(dim, d):
                    out.append(Simplex(g, e))
        return out

    def vertices(self) -> list[Simplex]:
        return [Simplex(g, identity(0)) for g in self.generators.get(0, ())]


def presentation_from_json(data: dict, name: str = "") -> SSetPresentation:
    """Build a presentation from the interchange form.

    ``generators`` maps dimension strings to name lists; ``faces`` maps each
    positive-dimensional generator to its list of faces, each either a bare
    generator name or ``{"gen": ..., "degeneracy": [i1, ..., ik]}`` naming
    the degeneracy word sigma_{i1} o ... o sigma_{ik}, outermost first.
    """
    gens = {int(d): tuple(names) for d, names in data["generators"].items()}
    dims = {g: d for d, names in gens.items() for g in names}
    faces: dict[str, tuple[Simplex, ...]] = {}
    for g, fs in data.get("faces", {}).items():
        if g not in dims:
            raise PresentationError(f"faces listed for unknown generator {g!r}")
        d = dims[g]
        parsed = []
        for f in fs:
            if isinstance(f, str):
                fgen, word = f, []
            else:
                fgen, word = f["gen"], list(f.get("degeneracy", []))
            if fgen not in dims:
                raise PresentationError(f"unknown face generator {fgen!r}")
            op = identity(dims[fgen])
            for i in word:
                op = compose_ops(op, sigma(i, op.domain_rank))
            if op.domain_rank != d - 1:
                raise PresentationError(
                    f"face {fgen!r} of {g!r} has dimension {op.domain_rank}, expected {d - 1}"
                )
            parsed.append(Simplex(fgen, op))
        faces[g] = tuple(parsed)
    return SSetPresentation(generators=gens, faces=faces, name=name)


def presentation_to_json(X: SSetPresentation) -> dict:
    gens = {str(d): list(names) for d, names in sorted(X.generators.items())}
    faces = {}
    for g, fs in X.faces.items():
        row = []
        for f in fs:
            if f.deg.is_identity:
                row.append(f.gen)
            else:
                row.append({"gen": f.gen, "degeneracy": degeneracy_word(f.deg)})
        faces[g] = row
    return {"generators": gens, "faces": faces}


def degeneracy_word(epi: SimplicialOperator) -> list[int]:
    """Write an epi as a word of degeneracies, outermost first.

    The returned list [i1, ..., ik] means sigma_{i1} o ... o sigma_{ik} with
    i1 > i2 > ... (the canonical decreasing word).
    """
    if not epi.is_epi:
        raise ValueError(f"{epi!r} is not surjective")
    word = []
    images = list(epi.images)
    while len(images) > len(set(images)):
        # find the largest repeated value; it is repeated at positions v, v+1
        # after earlier peels, and peeling keeps the map surjective
        i = max(v for k, v in enumerate(images[:-1]) if images[k + 1] == v)
        word.append(i)
        k = images.index(i)
        images.pop(k)
    return sorted(word, reverse=True)


@dataclass
class SSetMap:
    """A map of presented simplicial sets, given on generators."""

    dom: SSetPresentation
    cod: SSetPresentation
    on_gens: dict[str, Simplex]
    name: str = ""

    def __post_init__(self) -> None:
        for g, d in self.dom._dims.items():
            img = self.on_gens.get(g)
            if img is None:
                raise PresentationError(f"map misses generator {g!r}")
            if img.dim != d:
                raise PresentationError(f"image of {g!r} has wrong dimension")
        self._check_faces()

    def _check_faces(self) -> None:
        for g, d in self.dom._dims.items():
            for i in range(d + 1) if d > 0 else ():
                lhs = self(self.dom.face(g, i))
                rhs = self.cod.act(self(self.dom.generator(g)), delta(i, d))
                if lhs != rhs:
                    raise PresentationError(f"map breaks face {i} of {g!r}")

    def __call__(self, s: Simplex) -> Simplex:
        img = self.on_gens[s.gen]
        return self.cod.act(img, s.deg)
