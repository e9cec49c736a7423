"""Machine-checkable stability certificates for covers of higher-genus curves.

A certificate is a tree describing a degeneration of the target curve into
elliptic and rational pieces glued at nodes, together with a claimed verdict
at every node.  The generator peels off one elliptic component carrying two
branch points at a time:

* target genus 1: a leaf built from the cyclic cover with adjacent sheet
  identifications (stable when the bundle rank and degree are coprime,
  otherwise semistable);
* no branch points left: an unramified leaf, semistable unconditionally
  (stable for degree 2, where the bundle has rank 1);
* target genus 0: a leaf whose verdict is the balanced splitting type;
* target genus >= 2: a gluing node whose left child is an elliptic leaf with
  exactly two branch points (degree -1, hence stable) and whose right child
  certifies the rest with two fewer branch points.

``check_certificate`` trusts nothing: it recomputes every branch count,
genus ledger, rank, degree and slope, re-derives each leaf verdict, and
re-applies the one gluing rule (a bundle on a one-nodal curve is stable if
it restricts stably to one component and semistably to the other, and the
node is unramified).  Checking is total: bad certificates come back as
rejection values, never as exceptions.

Serialization is canonical JSON: sorted keys, exact integers, slopes as
fraction strings, a mandatory schema version.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Union

from .covers import CoverNumerics, branch_count, cover_numerics
from .errors import (
    DegenerateRank,
    EmptyHurwitzSpace,
    NoSuchCover,
    SchemaViolation,
)
from .etale import DiagonalDatum, cyclic_diagonal_subreps
from .splitting import general_p1_splitting
from .verdicts import StabilityTag, StabilityVerdict

SCHEMA_NAME = "tschirn-stability-certificate"
SCHEMA_VERSION = 1


@dataclass(frozen=True, slots=True)
class EllipticLeaf:
    """A branched cover of an elliptic component, built by sheet identifications."""

    r: int
    source_genus: int
    pairs: tuple[tuple[int, int], ...]
    claimed: StabilityVerdict
    numerics: CoverNumerics


@dataclass(frozen=True, slots=True)
class EtaleLeaf:
    """An unramified cover of a component of the given genus."""

    r: int
    target_genus: int
    claimed: StabilityVerdict
    numerics: CoverNumerics


@dataclass(frozen=True, slots=True)
class P1Leaf:
    """A cover of a rational component; the verdict is balancedness."""

    r: int
    source_genus: int
    claimed: StabilityVerdict
    numerics: CoverNumerics


@dataclass(frozen=True, slots=True)
class GlueNode:
    """Two covers glued over a node of the degenerate target."""

    node_etale: bool
    branch_split: tuple[int, int]
    left: Certificate
    right: Certificate
    claimed: StabilityVerdict
    numerics: CoverNumerics


Certificate = Union[EllipticLeaf, EtaleLeaf, P1Leaf, GlueNode]


@dataclass(frozen=True, slots=True)
class CertificateRejection:
    """Why a certificate was refused, and where."""

    code: str
    location: str
    message: str


# ------------------------------------------------------------------ building


def _elliptic_claim(r: int, npairs: int) -> StabilityVerdict:
    if gcd(r - 1, npairs) == 1:
        return StabilityVerdict(
            tag=StabilityTag.STABLE,
            reason=(
                f"clean nodal model with {npairs} identifications; "
                f"gcd(rank {r - 1}, degree {npairs}) = 1 upgrades semistable "
                "to stable for the general cover"
            ),
        )
    return StabilityVerdict(
        tag=StabilityTag.SEMISTABLE,
        reason=(
            f"semistable for the general cover: clean nodal model with "
            f"{npairs} identifications"
        ),
    )


def _etale_claim(r: int) -> StabilityVerdict:
    if r == 2:
        return StabilityVerdict(
            tag=StabilityTag.STABLE,
            reason="unramified degree-2 cover: the bundle has rank 1, hence stable",
        )
    return StabilityVerdict(
        tag=StabilityTag.SEMISTABLE,
        reason="unramified covers are semistable for every monodromy group",
    )


def _build(r: int, g: int, h: int) -> Certificate:
    b = branch_count(r, g, h)
    numerics = cover_numerics(r, g, h)
    if b == 0:
        assert h >= 1
        return EtaleLeaf(r=r, target_genus=h, claimed=_etale_claim(r), numerics=numerics)
    if h == 0:
        split = general_p1_splitting(r, g)
        return P1Leaf(
            r=r,
            source_genus=g,
            claimed=StabilityVerdict(
                tag=StabilityTag.BALANCED,
                reason=f"general cover splits with balanced type {split}",
            ),
            numerics=numerics,
        )
    if h == 1:
        npairs = b // 2
        assert npairs == g - 1
        pairs = tuple((i % r, (i + 1) % r) for i in range(npairs))
        return EllipticLeaf(
            r=r,
            source_genus=g,
            pairs=pairs,
            claimed=_elliptic_claim(r, npairs),
            numerics=numerics,
        )
    left = _build(r, 2, 1)
    g_right = 1 + r * (h - 2) + (b - 2) // 2
    right = _build(r, g_right, h - 1)
    assert g == 2 + g_right + r - 1, "composite genus ledger failed"
    return GlueNode(
        node_etale=True,
        branch_split=(2, b - 2),
        left=left,
        right=right,
        claimed=StabilityVerdict(
            tag=StabilityTag.STABLE,
            reason=(
                "glued over an unramified node from a stable piece and an "
                "at-least-semistable piece; stable for the general smoothing"
            ),
        ),
        numerics=numerics,
    )


def build_certificate(
    r: int, g: int, h: int, characteristic: int | None = None
) -> Certificate:
    """Certificate for the general degree-r genus-g cover of a genus-h curve.

    Needs at least one branch point; unramified inputs are routed to the
    monodromy criterion instead (``EmptyHurwitzSpace``).  When a positive
    ``characteristic`` larger than r is declared, the root claim is annotated
    as strong (semi)stability -- a label only, nothing Frobenius-specific is
    computed.
    """
    if h < 0:
        raise NoSuchCover(f"target genus must be non-negative, got {h}")
    if r == 1:
        raise DegenerateRank("degree-1 covers carry a rank-0 bundle")
    b = branch_count(r, g, h)
    if b == 0:
        raise EmptyHurwitzSpace(
            "no branch points: the cover is unramified, use the monodromy criterion"
        )
    cert = _build(r, g, h)
    if characteristic is not None and characteristic > r:
        claimed = cert.claimed
        annotated = replace(
            claimed,
            reason=claimed.reason
            + f"; strongly, in characteristic {characteristic} > {r} (label only)",
        )
        cert = replace(cert, claimed=annotated)
    return cert


# ------------------------------------------------------------------ checking


_Checked = "tuple[StabilityVerdict, CoverNumerics] | CertificateRejection"


def _mismatch(stored: CoverNumerics, expected: CoverNumerics) -> str | None:
    for field in ("r", "g", "h", "b", "tsch_rank", "tsch_degree", "slope"):
        s, e = getattr(stored, field), getattr(expected, field)
        if s != e:
            return f"{field}: stored {s}, recomputed {e}"
    return None


def _ledger(path: str, message: str) -> CertificateRejection:
    return CertificateRejection("LedgerMismatch", path, message)


def _rule(path: str, message: str) -> CertificateRejection:
    return CertificateRejection("RuleViolation", path, message)


def _check_elliptic(node: EllipticLeaf, path: str):
    if node.r < 2:
        return _ledger(path, f"cover degree {node.r} is below 2")
    if node.source_genus < 1:
        return _ledger(path, f"source genus {node.source_genus} is below 1")
    expected = cover_numerics(node.r, node.source_genus, 1)
    bad = _mismatch(node.numerics, expected)
    if bad is not None:
        return _ledger(path, bad)
    if expected.b % 2 != 0:
        return _ledger(path, f"odd branch degree {expected.b}")
    if len(node.pairs) != expected.b // 2:
        return _ledger(
            path,
            f"{len(node.pairs)} identifications cannot produce branch degree {expected.b}",
        )
    for i, (a, b) in enumerate(node.pairs):
        if not (0 <= a < node.r and 0 <= b < node.r) or a == b:
            return _ledger(path, f"identification {i} = ({a}, {b}) is not a valid pair")
        surviving = cyclic_diagonal_subreps(
            DiagonalDatum(r=node.r, sheet_a=a, sheet_b=b)
        )
        if surviving:
            return _rule(
                path,
                f"identification {i} = ({a}, {b}) is not clean: characters "
                f"{list(surviving)} survive in the diagonal",
            )
    npairs = len(node.pairs)
    if gcd(node.r - 1, npairs) == 1:
        verdict = StabilityVerdict(
            tag=StabilityTag.STABLE,
            reason=(
                f"elliptic leaf: clean nodal model, gcd(rank {node.r - 1}, "
                f"degree {npairs}) = 1, so the general cover is stable"
            ),
        )
    else:
        verdict = StabilityVerdict(
            tag=StabilityTag.SEMISTABLE,
            reason=f"elliptic leaf: clean nodal model with {npairs} identifications",
        )
    if node.claimed.tag != verdict.tag:
        return _rule(
            path,
            f"claimed {node.claimed.tag.value} but the leaf rule derives {verdict.tag.value}",
        )
    return verdict, expected


def _check_etale(node: EtaleLeaf, path: str):
    if node.r < 2:
        return _ledger(path, f"cover degree {node.r} is below 2")
    if node.target_genus < 1:
        return _ledger(path, f"unramified leaf needs target genus >= 1, got {node.target_genus}")
    source_genus = node.r * (node.target_genus - 1) + 1
    expected = cover_numerics(node.r, source_genus, node.target_genus)
    assert expected.b == 0
    bad = _mismatch(node.numerics, expected)
    if bad is not None:
        return _ledger(path, bad)
    tag = StabilityTag.STABLE if node.r == 2 else StabilityTag.SEMISTABLE
    if node.claimed.tag != tag:
        return _rule(
            path,
            f"claimed {node.claimed.tag.value} but unramified leaves carry {tag.value}",
        )
    verdict = StabilityVerdict(
        tag=tag,
        reason="unramified leaf: semistable for every monodromy group"
        + ("; rank 1, hence stable" if node.r == 2 else ""),
    )
    return verdict, expected


def _check_p1(node: P1Leaf, path: str):
    if node.r < 2:
        return _ledger(path, f"cover degree {node.r} is below 2")
    if node.source_genus < 0:
        return _ledger(path, f"source genus {node.source_genus} is negative")
    expected = cover_numerics(node.r, node.source_genus, 0)
    bad = _mismatch(node.numerics, expected)
    if bad is not None:
        return _ledger(path, bad)
    if node.claimed.tag != StabilityTag.BALANCED:
        return _rule(
            path,
            f"claimed {node.claimed.tag.value} but rational-target leaves carry Balanced",
        )
    split = general_p1_splitting(node.r, node.source_genus)
    verdict = StabilityVerdict(
        tag=StabilityTag.BALANCED,
        reason=f"rational leaf: the general cover splits with balanced type {split}",
    )
    return verdict, expected


def _check_glue(node: GlueNode, path: str):
    if not node.node_etale:
        return CertificateRejection(
            "RamifiedNode",
            path,
            "the gluing rule needs an unramified node; this node is marked ramified",
        )
    left = _check_node(node.left, path + "/left")
    if isinstance(left, CertificateRejection):
        return left
    right = _check_node(node.right, path + "/right")
    if isinstance(right, CertificateRejection):
        return right
    left_verdict, left_num = left
    right_verdict, right_num = right
    if left_num.r != right_num.r:
        return _ledger(path, f"children cover degrees differ: {left_num.r} vs {right_num.r}")
    r = left_num.r
    b_left, b_right = node.branch_split
    if b_left < 0 or b_right < 0:
        return _ledger(path, f"negative branch split {node.branch_split}")
    if b_left % 2 != 0 or b_right % 2 != 0:
        return _ledger(path, f"odd entry in branch split {node.branch_split}")
    if b_left != left_num.b:
        return CertificateRejection(
            "BranchSplitMismatch",
            path,
            f"split assigns {b_left} branch points left, the leaf ledger says {left_num.b}",
        )
    if b_right != right_num.b:
        return CertificateRejection(
            "BranchSplitMismatch",
            path,
            f"split assigns {b_right} branch points right, the leaf ledger says {right_num.b}",
        )
    g = left_num.g + right_num.g + r - 1
    h = left_num.h + right_num.h
    try:
        expected = cover_numerics(r, g, h)
    except (NoSuchCover, DegenerateRank) as e:
        return _ledger(path, f"composite numerics are impossible: {e}")
    if expected.b != b_left + b_right:
        return CertificateRejection(
            "BranchSplitMismatch",
            path,
            f"split sums to {b_left + b_right}, composite branch degree is {expected.b}",
        )
    bad = _mismatch(node.numerics, expected)
    if bad is not None:
        return _ledger(path, bad)
    if node.claimed.tag != StabilityTag.STABLE:
        return _rule(
            path,
            f"claimed {node.claimed.tag.value}, but the only derivable verdict "
            "at a gluing node is Stable",
        )
    hypothesis = (
        left_verdict.tag == StabilityTag.STABLE and right_verdict.at_least_semistable
    ) or (
        right_verdict.tag == StabilityTag.STABLE and left_verdict.at_least_semistable
    )
    if not hypothesis:
        return _rule(
            path,
            "stability at a node needs one stable side and one at-least-semistable "
            f"side; children are {left_verdict.tag.value} and {right_verdict.tag.value}",
        )
    verdict = StabilityVerdict(
        tag=StabilityTag.STABLE,
        reason=(
            f"gluing rule: {left_verdict.tag.value} and {right_verdict.tag.value} "
            "pieces over an unramified node give a stable general smoothing"
        ),
    )
    return verdict, expected


def _check_node(node: Certificate, path: str):
    if isinstance(node, EllipticLeaf):
        return _check_elliptic(node, path)
    if isinstance(node, EtaleLeaf):
        return _check_etale(node, path)
    if isinstance(node, P1Leaf):
        return _check_p1(node, path)
    return _check_glue(node, path)


def check_certificate(cert: Certificate) -> StabilityVerdict | CertificateRejection:
    """Re-derive everything; return the verified verdict or the first violation."""
    result = _check_node(cert, "/root")
    if isinstance(result, CertificateRejection):
        return result
    verdict, _ = result
    return verdict


# -------------------------------------------------------------- serialization


def _verdict_to_dict(v: StabilityVerdict) -> dict:
    assert v.witness is None, "certificate claims never carry witnesses"
    return {"tag": v.tag.value, "reason": v.reason}


def _numerics_to_dict(n: CoverNumerics) -> dict:
    return {
        "r": n.r,
        "g": n.g,
        "h": n.h,
        "b": n.b,
        "tsch_rank": n.tsch_rank,
        "tsch_degree": n.tsch_degree,
        "slope": str(n.slope),
    }


def _node_to_dict(node: Certificate) -> dict:
    if isinstance(node, EllipticLeaf):
        return {
            "kind": "elliptic",
            "r": node.r,
            "source_genus": node.source_genus,
            "pairs": [[a, b] for a, b in node.pairs],
            "claimed": _verdict_to_dict(node.claimed),
            "numerics": _numerics_to_dict(node.numerics),
        }
    if isinstance(node, EtaleLeaf):
        return {
            "kind": "etale",
            "r": node.r,
            "target_genus": node.target_genus,
            "claimed": _verdict_to_dict(node.claimed),
            "numerics": _numerics_to_dict(node.numerics),
        }
    if isinstance(node, P1Leaf):
        return {
            "kind": "p1",
            "r": node.r,
            "source_genus": node.source_genus,
            "claimed": _verdict_to_dict(node.claimed),
            "numerics": _numerics_to_dict(node.numerics),
        }
    return {
        "kind": "glue",
        "node_etale": node.node_etale,
        "branch_split": list(node.branch_split),
        "left": _node_to_dict(node.left),
        "right": _node_to_dict(node.right),
        "claimed": _verdict_to_dict(node.claimed),
        "numerics": _numerics_to_dict(node.numerics),
    }


def serialize(cert: Certificate) -> str:
    doc = {"schema": SCHEMA_NAME, "version": SCHEMA_VERSION, "root": _node_to_dict(cert)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _want_keys(obj: dict, keys: set[str], path: str) -> None:
    got = set(obj)
    if got != keys:
        missing = sorted(keys - got)
        extra = sorted(got - keys)
        parts = []
        if missing:
            parts.append(f"missing keys {missing}")
        if extra:
            parts.append(f"unexpected keys {extra}")
        raise SchemaViolation("; ".join(parts), path)


def _as_dict(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaViolation(f"expected an object, got {type(obj).__name__}", path)
    return obj


def _as_int(obj, path: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaViolation(f"expected an integer, got {obj!r}", path)
    return obj


def _as_bool(obj, path: str) -> bool:
    if not isinstance(obj, bool):
        raise SchemaViolation(f"expected a boolean, got {obj!r}", path)
    return obj


def _as_str(obj, path: str) -> str:
    if not isinstance(obj, str):
        raise SchemaViolation(f"expected a string, got {type(obj).__name__}", path)
    return obj


def _parse_verdict(obj, path: str) -> StabilityVerdict:
    d = _as_dict(obj, path)
    _want_keys(d, {"tag", "reason"}, path)
    tag_text = _as_str(d["tag"], path + "/tag")
    try:
        tag = StabilityTag(tag_text)
    except ValueError:
        raise SchemaViolation(f"unknown verdict tag {tag_text!r}", path + "/tag") from None
    return StabilityVerdict(tag=tag, reason=_as_str(d["reason"], path + "/reason"))


def _parse_numerics(obj, path: str) -> CoverNumerics:
    d = _as_dict(obj, path)
    _want_keys(d, {"r", "g", "h", "b", "tsch_rank", "tsch_degree", "slope"}, path)
    slope_text = _as_str(d["slope"], path + "/slope")
    try:
        slope = Fraction(slope_text)
    except (ValueError, ZeroDivisionError):
        raise SchemaViolation(f"bad slope {slope_text!r}", path + "/slope") from None
    return CoverNumerics(
        r=_as_int(d["r"], path + "/r"),
        g=_as_int(d["g"], path + "/g"),
        h=_as_int(d["h"], path + "/h"),
        b=_as_int(d["b"], path + "/b"),
        tsch_rank=_as_int(d["tsch_rank"], path + "/tsch_rank"),
        tsch_degree=_as_int(d["tsch_degree"], path + "/tsch_degree"),
        slope=slope,
    )


def _parse_pairs(obj, path: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(obj, list):
        raise SchemaViolation("expected a list of pairs", path)
    out = []
    for i, entry in enumerate(obj):
        if not isinstance(entry, list) or len(entry) != 2:
            raise SchemaViolation("expected a two-element list", f"{path}/{i}")
        out.append(
            (_as_int(entry[0], f"{path}/{i}/0"), _as_int(entry[1], f"{path}/{i}/1"))
        )
    return tuple(out)


def _parse_node(obj, path: str) -> Certificate:
    d = _as_dict(obj, path)
    kind = _as_str(d.get("kind"), path + "/kind") if "kind" in d else None
    if kind is None:
        raise SchemaViolation("missing 'kind'", path)
    if kind == "elliptic":
        _want_keys(d, {"kind", "r", "source_genus", "pairs", "claimed", "numerics"}, path)
        return EllipticLeaf(
            r=_as_int(d["r"], path + "/r"),
            source_genus=_as_int(d["source_genus"], path + "/source_genus"),
            pairs=_parse_pairs(d["pairs"], path + "/pairs"),
            claimed=_parse_verdict(d["claimed"], path + "/claimed"),
            numerics=_parse_numerics(d["numerics"], path + "/numerics"),
        )
    if kind == "etale":
        _want_keys(d, {"kind", "r", "target_genus", "claimed", "numerics"}, path)
        return EtaleLeaf(
            r=_as_int(d["r"], path + "/r"),
            target_genus=_as_int(d["target_genus"], path + "/target_genus"),
            claimed=_parse_verdict(d["claimed"], path + "/claimed"),
            numerics=_parse_numerics(d["numerics"], path + "/numerics"),
        )
    if kind == "p1":
        _want_keys(d, {"kind", "r", "source_genus", "claimed", "numerics"}, path)
        return P1Leaf(
            r=_as_int(d["r"], path + "/r"),
            source_genus=_as_int(d["source_genus"], path + "/source_genus"),
            claimed=_parse_verdict(d["claimed"], path + "/claimed"),
            numerics=_parse_numerics(d["numerics"], path + "/numerics"),
        )
    if kind == "glue":
        _want_keys(
            d,
            {"kind", "node_etale", "branch_split", "left", "right", "claimed", "numerics"},
            path,
        )
        split = d["branch_split"]
        if not isinstance(split, list) or len(split) != 2:
            raise SchemaViolation("expected a two-element list", path + "/branch_split")
        return GlueNode(
            node_etale=_as_bool(d["node_etale"], path + "/node_etale"),
            branch_split=(
                _as_int(split[0], path + "/branch_split/0"),
                _as_int(split[1], path + "/branch_split/1"),
            ),
            left=_parse_node(d["left"], path + "/left"),
            right=_parse_node(d["right"], path + "/right"),
            claimed=_parse_verdict(d["claimed"], path + "/claimed"),
            numerics=_parse_numerics(d["numerics"], path + "/numerics"),
        )
    raise SchemaViolation(f"unknown node kind {kind!r}", path + "/kind")


def deserialize(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaViolation(f"invalid JSON: {e}", "") from None
    d = _as_dict(doc, "")
    _want_keys(d, {"schema", "version", "root"}, "")
    schema = _as_str(d["schema"], "/schema")
    if schema != SCHEMA_NAME:
        raise SchemaViolation(f"unknown schema {schema!r}", "/schema")
    version = _as_int(d["version"], "/version")
    if version != SCHEMA_VERSION:
        raise SchemaViolation(f"unsupported version {version}", "/version")
    return _parse_node(d["root"], "/root")
