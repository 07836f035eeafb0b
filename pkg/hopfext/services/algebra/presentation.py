"""Finite presentations k<X>/(R) and their TOML file format (see docs/presentations.md)."""
from __future__ import annotations

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path

from hopfext.core.errors import ParseError, PreconditionError
from hopfext.core.field import FieldSpec, field_make, root_of_unity
from hopfext.services.algebra.parser import ExpressionParser
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.words import Generator, MonomialOrder, multidegree


@dataclass(frozen=True)
class Presentation:
    field: FieldSpec
    generators: tuple[Generator, ...]
    relations: tuple[NcPolynomial, ...]
    order: MonomialOrder
    expected_dimension: int | None = None
    degree_bound: int | None = None
    name: str = ""
    scalars: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def graded(self) -> bool:
        return bool(self.generators) and bool(self.generators[0].degree)

    def index(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.index
        raise KeyError(name)

    def parser(self) -> ExpressionParser:
        return ExpressionParser(self.field, self.names, self.scalars)

    def parse(self, text: str) -> NcPolynomial:
        return self.parser().parse(text)

    def check_homogeneous(self) -> None:
        """Every relation must be homogeneous for the declared multidegree."""
        if not self.graded:
            return
        gens = list(self.generators)
        for rel in self.relations:
            degrees = {multidegree(w, gens) for w in rel.terms}
            if len(degrees) > 1:
                raise PreconditionError(
                    f"relation {rel.format(self.names)} is not homogeneous: degrees {sorted(degrees)}"
                )


def make_presentation(
    field: FieldSpec,
    names: list[str],
    relations: list[str | NcPolynomial],
    degrees: list[tuple[int, ...]] | None = None,
    precedence: list[str] | None = None,
    grouplike: set[str] | None = None,
    expected_dimension: int | None = None,
    degree_bound: int | None = None,
    name: str = "",
    scalars: dict | None = None,
) -> Presentation:
    """Build a Presentation from generator names and relation strings/polynomials."""
    grouplike = grouplike or set()
    gens = tuple(
        Generator(i, n, tuple(degrees[i]) if degrees else (), n in grouplike)
        for i, n in enumerate(names)
    )
    index = {n: i for i, n in enumerate(names)}
    order = MonomialOrder(tuple(index[n] for n in (precedence or names)))
    parser = ExpressionParser(field, list(names), scalars)
    rels = []
    for k, r in enumerate(relations):
        poly = parser.parse(r, line=k + 1) if isinstance(r, str) else r
        if not poly.is_zero():
            rels.append(poly)
    pres = Presentation(
        field=field,
        generators=gens,
        relations=tuple(rels),
        order=order,
        expected_dimension=expected_dimension,
        degree_bound=degree_bound,
        name=name,
        scalars=dict(scalars or {}),
    )
    pres.check_homogeneous()
    return pres


# ── TOML loading ──

def field_from_block(block: dict) -> FieldSpec:
    if "p" not in block:
        raise ParseError("[field] needs p")
    return field_make(int(block["p"]), int(block.get("m", 1)), block.get("modulus"))


def scalars_from_block(field: FieldSpec, block: dict) -> dict[str, int]:
    """Scalars given as ints, or as {root = d, power = k} meaning zeta_d^k."""
    out = {}
    for key, value in block.items():
        if isinstance(value, dict):
            zeta = root_of_unity(field, int(value["root"]))
            out[key] = field.pow(zeta, int(value.get("power", 1)))
        else:
            out[key] = field.scalar(int(value))
    return out


def presentation_from_dict(data: dict, name: str = "") -> Presentation:
    field = field_from_block(data.get("field", {}))
    scalars = scalars_from_block(field, data.get("scalars", {}))
    gens = data.get("generators", [])
    if not gens:
        raise ParseError("no [[generators]] declared")
    names = [g["name"] for g in gens]
    degrees = [tuple(g["degree"]) for g in gens] if all("degree" in g for g in gens) else None
    grouplike = {g["name"] for g in gens if g.get("grouplike")}
    algebra = data.get("algebra", {})
    return make_presentation(
        field,
        names,
        list(data.get("relations", {}).get("rels", [])),
        degrees=degrees,
        precedence=algebra.get("order"),
        grouplike=grouplike,
        expected_dimension=algebra.get("expected_dimension"),
        degree_bound=algebra.get("degree_bound"),
        name=algebra.get("name", name),
        scalars=scalars,
    )


def load_presentation(path: str | Path) -> Presentation:
    path = Path(path)
    try:
        data = tomllib.loads(path.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"{path.name}: {e}") from e
    return presentation_from_dict(data, name=path.stem)


def emit_presentation(pres: Presentation) -> str:
    """Render a presentation back to the TOML file format."""
    f = pres.field
    lines = [f"# {pres.name}" if pres.name else "# presentation", "", "[field]", f"p = {f.p}", f"m = {f.m}"]
    if f.m > 1:
        lines.append(f"modulus = {list(f.modulus)}")
    lines += ["", "[algebra]"]
    if pres.name:
        lines.append(f'name = "{pres.name}"')
    lines.append("order = [" + ", ".join(f'"{pres.generators[i].name}"' for i in pres.order.precedence) + "]")
    if pres.expected_dimension is not None:
        lines.append(f"expected_dimension = {pres.expected_dimension}")
    if pres.degree_bound is not None:
        lines.append(f"degree_bound = {pres.degree_bound}")
    for g in pres.generators:
        lines += ["", "[[generators]]", f'name = "{g.name}"']
        if g.degree:
            lines.append(f"degree = {list(g.degree)}")
        if g.grouplike:
            lines.append("grouplike = true")
    lines += ["", "[relations]", "rels = ["]
    for rel in pres.relations:
        lines.append(f'  "{rel.format(pres.names, pres.order)}",')
    lines.append("]")
    return "\n".join(lines) + "\n"
