"""Partial self-maps of a field: table maps, the squaring-exponent map on a
cyclic subgroup, and the digit-encoded discrete logarithm.

A PartialMap knows its values on an ordered subset of the field; a total map
is the special case where the domain is everything.  For the two subgroup
maps the domain is kept in exponent order gen^0, gen^1, ..., gen^(T-1),
which keeps consecutive-exponent checks linear-time.
"""

import csv
import io
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import MTooLarge
from .field import Field, Subgroup


@dataclass(frozen=True)
class PartialMap:
    field: Field
    domain: tuple
    values: tuple = dc_field(repr=False)
    tag: str = "table"
    m: int = 0
    seed: int | None = None

    def __post_init__(self):
        if len(self.domain) != len(self.values):
            raise ValueError("domain and values must have equal length")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("domain elements must be pairwise distinct")

    @cached_property
    def as_dict(self) -> dict:
        return dict(zip(self.domain, self.values))

    @property
    def is_total(self) -> bool:
        return len(self.domain) == self.field.q

    def __len__(self):
        return len(self.domain)

    def restrict(self, keep_positions) -> "PartialMap":
        dom = tuple(self.domain[i] for i in keep_positions)
        val = tuple(self.values[i] for i in keep_positions)
        return PartialMap(self.field, dom, val, tag=self.tag, m=self.m, seed=self.seed)


def dh_map(G: Subgroup) -> PartialMap:
    """gen^x -> gen^(x^2 mod T) on the subgroup, in exponent order."""
    values = tuple(G.elements[(x * x) % G.T] for x in range(G.T))
    return PartialMap(G.field, G.elements, values, tag="dh")


def disclog_map(G: Subgroup) -> PartialMap:
    """gen^x -> xi_x, the digit encoding of the exponent in the ordered basis."""
    values = tuple(G.field.element_of_index(x) for x in range(G.T))
    return PartialMap(G.field, G.elements, values, tag="disclog")


def table_map(field: Field, values, domain=None) -> PartialMap:
    if domain is None:
        domain = tuple(range(field.q))
    return PartialMap(field, tuple(domain), tuple(values), tag="table")


def perturb(F: PartialMap, m: int, seed: int) -> PartialMap:
    """Copy of F changed in exactly m seeded-random positions (new != old)."""
    if m < 0 or m > len(F.domain):
        raise MTooLarge(f"m={m} out of range for domain of size {len(F.domain)}")
    if m == 0:
        return F
    rng = random.Random(seed)
    positions = sorted(rng.sample(range(len(F.domain)), m))
    values = list(F.values)
    q = F.field.q
    for i in positions:
        v = rng.randrange(q - 1)
        if v >= values[i]:
            v += 1
        values[i] = v
    return PartialMap(F.field, F.domain, tuple(values), tag="perturbed", m=m, seed=seed)


def distinct_values(F: PartialMap) -> int:
    return len(set(F.values))


def map_to_csv(F: PartialMap) -> str:
    """Rows (x, domain_element_digits, value_digits); digits joined by '-'."""
    out = io.StringIO()
    w = csv.writer(out)
    w.writerow(["x", "domain_element_digits", "value_digits"])
    for x, (d, v) in enumerate(zip(F.domain, F.values)):
        w.writerow([x, _fmt(F.field, d), _fmt(F.field, v)])
    return out.getvalue()


def map_from_csv(field: Field, text: str) -> PartialMap:
    rows = list(csv.reader(io.StringIO(text)))
    if rows and rows[0] and rows[0][0] == "x":
        rows = rows[1:]
    domain, values = [], []
    for row in rows:
        if not row:
            continue
        domain.append(_parse(field, row[1]))
        values.append(_parse(field, row[2]))
    return PartialMap(field, tuple(domain), tuple(values), tag="table")


def _fmt(field, code):
    return "-".join(str(d) for d in field.digits(code))


def _parse(field, text):
    return field.code([int(c) for c in text.split("-")])
