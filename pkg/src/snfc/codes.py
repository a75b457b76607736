"""Linear sum-computing network codes and their key-mixing secure variants.

The pipeline: draw a random rate-R multicast code on the edge-reversed network,
transpose its kernels into a code that delivers the coordinate-wise sum of all
source vectors to the sink, then pre-multiply every source by the inverse of a
mixing matrix B whose leading columns stay clear of everything any allowed
wiretap set can observe.  Each source then spends R - r coordinates on messages
and r on uniform one-time keys.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bounds import primary_wiretap_sets
from .cuts import c_min
from .errors import (
    ConstructionFailed,
    FieldTooSmall,
    FieldTooSmallForMulticast,
    MalformedInput,
    PrimeFieldInput,
    RateExceedsMinCut,
    RateInfeasible,
    ReversalInconsistent,
    ShapeMismatch,
    Singular,
    SingularB,
)
from .gf import MAX_FIELD_SIZE, Field, Matrix, companion_expand, make_field, parse_field
from .network import Network, reverse

MULTICAST_ATTEMPTS = 64


# -- code types -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SumCode:
    """A rate-R code delivering the per-coordinate sum of all source vectors."""

    field: Field
    rate: int
    source_matrices: dict[str, dict[str, tuple[int, ...]]]  # source -> out-edge -> column
    local_coeffs: dict[str, dict[str, int]]  # edge -> in-edge of its tail -> coefficient
    decoder: Matrix  # |in(sink)| x R

    def source_column(self, source: str, edge_id: str) -> tuple[int, ...]:
        return self.source_matrices.get(source, {}).get(edge_id, (0,) * self.rate)

    def coefficient(self, from_edge: str, to_edge: str) -> int:
        return self.local_coeffs.get(to_edge, {}).get(from_edge, 0)


@dataclass(frozen=True, eq=False)
class SecureCode:
    """A sum code wrapped with the mixing matrix B and a message/key split."""

    base: SumCode
    r: int
    mixing: Matrix  # B, rate x rate, invertible

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def rate(self) -> int:
        return self.base.rate

    @property
    def ell(self) -> int:
        return self.base.rate - self.r

    @cached_property
    def mixing_inverse(self) -> Matrix:
        return self.mixing.inverse()

    def message_dims(self, sources: Iterable[str]) -> dict[str, int]:
        return {s: self.ell for s in sources}

    def key_dims(self, sources: Iterable[str]) -> dict[str, int]:
        return {s: self.r for s in sources}

    def effective_source_column(self, source: str, edge_id: str) -> tuple[int, ...]:
        """The column actually applied at the source: B^-1 times the raw column."""
        raw = self.base.source_column(source, edge_id)
        return self.mixing_inverse.mul(Matrix.column(self.field, raw)).col(0)


def as_secure(code: SumCode | SecureCode, r: int | None = None) -> SecureCode:
    """View any code as a secure code; a bare sum code gets B = I and r = 0."""
    if isinstance(code, SecureCode):
        if r is None or r == code.r:
            return code
        if not 0 <= r <= code.rate:
            raise ShapeMismatch(f"security level {r} out of range for rate {code.rate}")
        return SecureCode(code.base, r, code.mixing)
    r = 0 if r is None else r
    if not 0 <= r <= code.rate:
        raise ShapeMismatch(f"security level {r} out of range for rate {code.rate}")
    return SecureCode(code, r, Matrix.identity(code.field, code.rate))


# -- global encoding vectors ---------------------------------------------------------

def _embed_block(vec: tuple[int, ...], block: int, blocks: int, size: int) -> tuple[int, ...]:
    out = [0] * (blocks * size)
    out[block * size : (block + 1) * size] = vec
    return tuple(out)


def global_vectors(code: SumCode | SecureCode, net: Network, *, mixed: bool = False) -> dict[str, tuple[int, ...]]:
    """Per-edge stacked column vectors mapping all source inputs to edge symbols.

    Computed by walking the edges in topological order and applying the local
    rules; with mixed=True the source columns are the B^-1-transformed ones, so
    the result describes what actually flows in the secure code.
    """
    secure = as_secure(code) if mixed or isinstance(code, SecureCode) else None
    base = secure.base if secure else code
    assert isinstance(base, SumCode)
    field = base.field
    rate = base.rate
    s = net.num_sources
    src_index = {name: i for i, name in enumerate(net.sources)}
    out: dict[str, tuple[int, ...]] = {}
    for eid in net.order:
        e = net.edge_by_id[eid]
        if e.tail in src_index:
            col = (
                secure.effective_source_column(e.tail, eid)
                if mixed and secure
                else base.source_column(e.tail, eid)
            )
            out[eid] = _embed_block(col, src_index[e.tail], s, rate)
        else:
            acc = [0] * (s * rate)
            for d in net.in_edges[e.tail]:
                coeff = base.coefficient(d.id, eid)
                if coeff:
                    prev = out[d.id]
                    acc = [field.add(a, field.mul(coeff, b)) for a, b in zip(acc, prev)]
            out[eid] = tuple(acc)
    return out


def transfer_global_vectors(code: SumCode, net: Network) -> dict[str, tuple[int, ...]]:
    """The same vectors via the closed-form transfer matrix (I - A)^-1.

    Kept as an independent route: the propagation in global_vectors and this
    inversion must agree on every edge.
    """
    field = code.field
    n = len(net.order)
    pos = net.order_index
    a_rows = [[0] * n for _ in range(n)]
    for eid, incoming in code.local_coeffs.items():
        for did, coeff in incoming.items():
            if coeff:
                assert pos[did] < pos[eid], "local coefficients must follow the edge order"
                a_rows[pos[did]][pos[eid]] = coeff % field.q
    eye = Matrix.identity(field, n)
    i_minus_a = Matrix.build(field, [
        [field.sub(eye.data[i][j], a_rows[i][j]) for j in range(n)] for i in range(n)
    ])
    transfer = i_minus_a.inverse()
    blocks: list[Matrix] = []
    for source in net.sources:
        rows = [[0] * n for _ in range(code.rate)]
        for e in net.out_edges[source]:
            col = code.source_column(source, e.id)
            for i in range(code.rate):
                rows[i][pos[e.id]] = col[i]
        blocks.append(Matrix.build(field, rows, n).mul(transfer))
    return {
        eid: tuple(itertools.chain.from_iterable(b.col(pos[eid]) for b in blocks))
        for eid in net.order
    }


def sink_matrix(vectors: dict[str, tuple[int, ...]], net: Network, field: Field, dim: int) -> Matrix:
    """Columns of the sink's in-edges, in topological order."""
    cols = [vectors[e.id] for e in net.in_edges[net.sink]]
    return Matrix.from_columns(field, cols, nrows=dim)


def secure_vectors(code: SecureCode, net: Network) -> dict[str, tuple[int, ...]]:
    return global_vectors(code, net, mixed=True)


# -- multicast on the reversed network ---------------------------------------------

@dataclass(frozen=True, eq=False)
class MulticastCode:
    """A decodable rate-R single-source code on the reversed network.

    Kernel rows/columns and decode-matrix columns are indexed by the original
    network's edge order throughout.
    """

    field: Field
    rate: int
    kernels: dict[str, Matrix]
    global_kernels: dict[str, tuple[int, ...]]
    decode_matrices: dict[str, Matrix]
    right_inverses: dict[str, Matrix]


def build_reversed_multicast(net: Network, rate: int, field: Field, seed: int) -> MulticastCode:
    """Draw random local kernels on the reversed network until every original
    source, acting as a multicast sink, can decode all R symbols."""
    if rate > c_min(net):
        raise RateExceedsMinCut(f"rate {rate} exceeds the smallest source min-cut {c_min(net)}")
    if rate < 1:
        raise RateInfeasible("multicast rate must be positive")
    rev = reverse(net)
    rng = random.Random(f"{seed}|{field.p}^{field.m}|{rate}")
    eye = Matrix.identity(field, rate)
    for _ in range(MULTICAST_ATTEMPTS):
        kernels: dict[str, Matrix] = {}
        for v in net.nodes:
            if v in net.sources:
                continue  # original sources are multicast sinks: no kernel
            n_in = rate if v == net.sink else len(net.out_edges[v])
            n_out = len(net.in_edges[v])
            kernels[v] = Matrix.build(
                field,
                [[rng.randrange(field.q) for _ in range(n_out)] for _ in range(n_in)],
                ncols=n_out,
            )
        fe: dict[str, tuple[int, ...]] = {}
        for eid in rev.order:
            e = net.edge_by_id[eid]
            v = e.head  # tail on the reversed graph
            col_pos = [x.id for x in net.in_edges[v]].index(eid)
            if v == net.sink:
                fe[eid] = kernels[v].col(col_pos)
            else:
                acc = [0] * rate
                for row_pos, d in enumerate(net.out_edges[v]):
                    coeff = kernels[v].data[row_pos][col_pos]
                    if coeff:
                        acc = [field.add(a, field.mul(coeff, b)) for a, b in zip(acc, fe[d.id])]
                fe[eid] = tuple(acc)
        decode = {
            s: Matrix.from_columns(field, [fe[e.id] for e in net.out_edges[s]], nrows=rate)
            for s in net.sources
        }
        if all(m.rank() == rate for m in decode.values()):
            right = {}
            for s, m in decode.items():
                k = m.solve_right(eye)
                assert k is not None, "full row rank guarantees a right inverse"
                right[s] = k
            return MulticastCode(field, rate, kernels, fe, decode, right)
    raise FieldTooSmallForMulticast(
        f"no decodable rate-{rate} multicast code found over {field!r} in {MULTICAST_ATTEMPTS} attempts"
    )


def sum_code_from_multicast(mc: MulticastCode, net: Network) -> SumCode:
    """Transpose the reversed multicast kernels into a sum-computing code.

    Per-source matrices come from the transposed right inverses, intermediate
    coefficients from the transposed kernels, and the decoder from the
    transposed kernel of the original sink; the stacked-identity decoding
    property is asserted before returning.
    """
    field = mc.field
    rate = mc.rate
    source_matrices: dict[str, dict[str, tuple[int, ...]]] = {}
    for s in net.sources:
        k = mc.right_inverses[s]  # |out(s)| x R, rows indexed by out-edges
        source_matrices[s] = {e.id: k.row(i) for i, e in enumerate(net.out_edges[s])}
    local_coeffs: dict[str, dict[str, int]] = {}
    for v in net.nodes:
        if v in net.sources or v == net.sink:
            continue
        kernel = mc.kernels[v]  # rows: out-edges of v, cols: in-edges of v
        for row_pos, e_out in enumerate(net.out_edges[v]):
            entry = {}
            for col_pos, e_in in enumerate(net.in_edges[v]):
                coeff = kernel.data[row_pos][col_pos]
                if coeff:
                    entry[e_in.id] = coeff
            if entry:
                local_coeffs[e_out.id] = entry
    decoder = mc.kernels[net.sink].transpose()  # |in(sink)| x R
    code = SumCode(field, rate, source_matrices, local_coeffs, decoder)
    vectors = transfer_global_vectors(code, net)
    stacked = Matrix.build(
        field, [Matrix.identity(field, rate).data[i % rate] for i in range(rate * net.num_sources)]
    )
    if sink_matrix(vectors, net, field, rate * net.num_sources).mul(decoder).data != stacked.data:
        raise ReversalInconsistent("reversed code does not decode the stacked identity")
    return code


# -- mixing matrix -----------------------------------------------------------------

SCAN_CAP = 1024


class _Span:
    """A subspace kept in row-echelon form; membership tests by reduction."""

    __slots__ = ("field", "dim", "rows")

    def __init__(self, field: Field, dim: int, vectors=()):
        self.field = field
        self.dim = dim
        self.rows: dict[int, tuple[int, ...]] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v) -> tuple[int, ...]:
        f = self.field
        v = list(v)
        for pivot, row in self.rows.items():
            c = v[pivot]
            if c:
                for i in range(pivot, self.dim):
                    v[i] = f.sub(v[i], f.mul(c, row[i]))
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        reduced = self.reduce(v)
        pivot = next((i for i, x in enumerate(reduced) if x), None)
        if pivot is None:
            return False
        inv = self.field.inv(reduced[pivot])
        self.rows[pivot] = tuple(self.field.mul(inv, x) for x in reduced)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def signature(self) -> frozenset:
        # fully reduced form, canonical for span equality
        f = self.field
        pivots = sorted(self.rows)
        rows = {p: list(self.rows[p]) for p in pivots}
        for p in pivots:
            for q_ in pivots:
                if q_ < p and rows[q_][p]:
                    c = rows[q_][p]
                    rows[q_] = [f.sub(a, f.mul(c, b)) for a, b in zip(rows[q_], rows[p])]
        return frozenset(tuple(rows[p]) for p in pivots)


def _first_outside(field: Field, span: _Span, dim: int) -> tuple[int, ...]:
    for i in range(dim):
        basis = tuple(1 if k == i else 0 for k in range(dim))
        if not span.contains(basis):
            return basis
    raise AssertionError("a proper subspace misses some standard basis vector")


def _vector_avoiding(field: Field, spans: list[_Span], dim: int) -> tuple[int, ...] | None:
    """A vector outside every span, or None.

    Below the scan cap this is the lexicographically first such vector; beyond
    it, a deterministic subspace-avoidance walk (move along a line out of each
    offending span) that succeeds whenever the field outgrows the span count.
    """
    if any(s.rank >= dim for s in spans):
        return None
    if field.q**dim <= SCAN_CAP:
        for cand in itertools.product(field.elements(), repeat=dim):
            if all(not s.contains(cand) for s in spans):
                return cand
        return None
    v = _first_outside(field, spans[0], dim)
    passed = [spans[0]]
    for span in spans[1:]:
        if span.contains(v):
            w = _first_outside(field, span, dim)
            for lam in range(1, field.q):
                cand = tuple(field.add(a, field.mul(lam, b)) for a, b in zip(v, w))
                if not span.contains(cand) and all(not p.contains(cand) for p in passed):
                    v = cand
                    break
            else:
                return None
        passed.append(span)
    return v


def choose_mixing_matrix(
    code: SumCode, r: int, family: list[tuple[str, ...]], net: Network
) -> Matrix:
    """Pick the R columns of B greedily.

    The first R - r columns must avoid, for every wiretap set in the family and
    every source, the span of that source's observable columns plus the columns
    already chosen; the rest only need to keep B invertible.  Candidates are
    scanned in lexicographic order of their integer encodings (the scan falls
    back to a constructive walk only beyond the exhaustive-scan cap).
    """
    field = code.field
    rate = code.rate
    if not 0 <= r <= rate:
        raise ShapeMismatch(f"security level {r} out of range for rate {rate}")
    vectors = global_vectors(code, net)
    obstacles: dict[frozenset, _Span] = {}
    for wset in family:
        for i in range(net.num_sources):
            cols = [
                vectors[eid][i * rate : (i + 1) * rate]
                for eid in wset
                if any(vectors[eid][i * rate : (i + 1) * rate])
            ]
            if not cols:
                continue
            span = _Span(field, rate, cols)
            obstacles.setdefault(span.signature(), span)
    observed = list(obstacles.values())
    chosen: list[tuple[int, ...]] = []
    chosen_span = _Span(field, rate)
    for j in range(rate):
        active = (observed or [chosen_span]) if j < rate - r else [chosen_span]
        pick = _vector_avoiding(field, active, rate)
        if pick is None:
            raise FieldTooSmall(f"no admissible mixing column over {field!r} at position {j + 1}")
        chosen.append(pick)
        chosen_span.add(pick)
        for span in observed:
            span.add(pick)
    return Matrix.from_columns(field, chosen, nrows=rate)


def secure_code(code: SumCode, mixing: Matrix, r: int) -> SecureCode:
    """Wrap a sum code with a mixing matrix, splitting each source into
    rate - r message and r key coordinates."""
    if mixing.nrows != code.rate or mixing.ncols != code.rate:
        raise ShapeMismatch(f"mixing matrix must be {code.rate}x{code.rate}")
    if not 0 <= r <= code.rate:
        raise ShapeMismatch(f"security level {r} out of range for rate {code.rate}")
    if mixing.field != code.field:
        raise ShapeMismatch("mixing matrix over the wrong field")
    try:
        mixing.inverse()
    except Singular:
        raise SingularB("mixing matrix is singular") from None
    return SecureCode(code, r, mixing)


# -- end-to-end construction ----------------------------------------------------------

def construct(
    net: Network,
    r: int,
    rate: int | None = None,
    field: Field | None = None,
    seed: int = 0,
) -> SecureCode:
    """Build an admissible secure sum-computing code of message rate R - r.

    Small fields are tried first (they often work well below the counting
    guarantee q > s * |family|); on failure the extension degree grows until the
    guarantee kicks in or the supported field size runs out.
    """
    cm = c_min(net)
    target_rate = cm if rate is None else rate
    if not 0 <= r <= cm:
        raise RateInfeasible(f"security level {r} outside [0, {cm}]")
    if not r <= target_rate <= cm:
        raise RateInfeasible(f"rate {target_rate} outside [{r}, {cm}]")
    if target_rate - r < 1:
        raise RateInfeasible(f"rate {target_rate} leaves no message coordinates at security level {r}")
    family = primary_wiretap_sets(net, r, exact_size=True)
    p = field.p if field is not None else 2
    degree = field.m if field is not None else 1
    last_error: Exception | None = None
    while p**degree <= MAX_FIELD_SIZE:
        fld = field if field is not None and degree == field.m else make_field(p, degree)
        try:
            mc = build_reversed_multicast(net, target_rate, fld, seed)
            base = sum_code_from_multicast(mc, net)
            if r == 0:
                mixing = Matrix.identity(fld, target_rate)
            else:
                mixing = choose_mixing_matrix(base, r, family, net)
            return secure_code(base, mixing, r)
        except (FieldTooSmall, FieldTooSmallForMulticast) as exc:
            last_error = exc
            degree += 1
    raise ConstructionFailed(
        f"no field of size <= {MAX_FIELD_SIZE} admits the construction: {last_error}"
    )


# -- extension-field lifting ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LiftedCode:
    """A secure code over GF(p^L) re-read as a vector-linear code over GF(p).

    Every scalar becomes its L x L multiplication matrix, so the code computes
    the sum ell = (R - r) * L times per n = L network uses; the message rate
    R - r is unchanged.
    """

    base_prime: int
    ell: int
    n: int
    rate: int
    source_matrices: dict[str, dict[str, Matrix]]
    local_matrices: dict[str, dict[str, Matrix]]
    decoder: Matrix


def lift_extension(code: SecureCode, net: Network) -> LiftedCode:
    field = code.field
    if field.m == 1:
        raise PrimeFieldInput("the code is already over a prime field")
    L = field.m
    src_mats = {
        s: {
            e.id: companion_expand(Matrix.column(field, code.effective_source_column(s, e.id)))
            for e in net.out_edges[s]
        }
        for s in net.sources
    }
    local_mats = {
        eid: {
            did: companion_expand(Matrix.build(field, [[coeff]]))
            for did, coeff in incoming.items()
        }
        for eid, incoming in code.base.local_coeffs.items()
    }
    selector = Matrix.build(
        field,
        [[1 if i == j else 0 for j in range(code.ell)] for i in range(code.rate)],
        ncols=code.ell,
    )
    message_decoder = code.base.decoder.mul(code.mixing).mul(selector)
    return LiftedCode(
        base_prime=field.p,
        ell=code.ell * L,
        n=L,
        rate=code.ell,
        source_matrices=src_mats,
        local_matrices=local_mats,
        decoder=companion_expand(message_decoder),
    )


# -- serialization -----------------------------------------------------------------------

def code_to_dict(code: SecureCode, net: Network) -> dict:
    field = code.field
    vectors = global_vectors(code.base, net)
    return {
        "field": field.spec_string(),
        "modulus": list(field.modulus),
        "rate": code.rate,
        "r": code.r,
        "sources": list(net.sources),
        "source_matrices": {
            s: {eid: list(col) for eid, col in sorted(cols.items())}
            for s, cols in code.base.source_matrices.items()
        },
        "local_coeffs": {
            eid: dict(sorted(entry.items())) for eid, entry in sorted(code.base.local_coeffs.items())
        },
        "B": [list(row) for row in code.mixing.data],
        "global_vectors": {eid: list(vectors[eid]) for eid in net.order},
        "decoder_D": [list(row) for row in code.base.decoder.data],
    }


def save_code(path: str, code: SecureCode, net: Network) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(code_to_dict(code, net), fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_code(doc: dict | str | bytes, net: Network) -> SecureCode:
    """Parse a code file, recompute its global vectors, and cross-check the
    stored ones before returning the code."""
    if not isinstance(doc, dict):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedInput("code document must be a JSON object")
    try:
        fld = parse_field(str(doc["field"]), doc.get("modulus"))
        rate = int(doc["rate"])
        r = int(doc["r"])
        sources = [str(s) for s in doc["sources"]]
        raw_sources = dict(doc["source_matrices"])
        raw_coeffs = dict(doc.get("local_coeffs") or {})
        raw_b = [list(row) for row in doc["B"]]
        raw_decoder = [list(row) for row in doc["decoder_D"]]
        int_rows = lambda rows: [[int(x) for x in row] for row in rows]
        raw_b, raw_decoder = int_rows(raw_b), int_rows(raw_decoder)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise MalformedInput(f"bad code document: {exc}") from None
    if sources != list(net.sources):
        raise MalformedInput("code sources do not match the network")
    if rate < 1 or not 0 <= r < rate:
        raise MalformedInput(f"need 0 <= r < rate, got r={r}, rate={rate}")
    try:
        source_matrices: dict[str, dict[str, tuple[int, ...]]] = {}
        for s, cols in raw_sources.items():
            if s not in net.sources:
                raise MalformedInput(f"unknown source {s!r}")
            out_ids = {e.id for e in net.out_edges[s]}
            parsed = {}
            for eid, col in cols.items():
                if eid not in out_ids:
                    raise MalformedInput(f"edge {eid!r} is not an out-edge of {s!r}")
                if len(col) != rate:
                    raise ShapeMismatch(f"source column for {eid!r} must have length {rate}")
                parsed[eid] = tuple(int(x) % fld.q for x in col)
            source_matrices[s] = parsed
        local_coeffs: dict[str, dict[str, int]] = {}
        src_set = set(net.sources)
        for eid, entry in raw_coeffs.items():
            if eid not in net.edge_by_id:
                raise MalformedInput(f"unknown edge {eid!r} in local_coeffs")
            tail = net.edge_by_id[eid].tail
            if tail in src_set:
                raise MalformedInput(f"edge {eid!r} leaves a source; it belongs in source_matrices")
            in_ids = {e.id for e in net.in_edges[tail]}
            parsed_entry = {}
            for did, coeff in entry.items():
                if did not in in_ids:
                    raise MalformedInput(f"{did!r} is not an in-edge of the tail of {eid!r}")
                parsed_entry[did] = int(coeff) % fld.q
            local_coeffs[eid] = parsed_entry
    except (TypeError, ValueError, AttributeError) as exc:
        raise MalformedInput(f"bad code document: {exc}") from None
    n_in = len(net.in_edges[net.sink])
    if len(raw_decoder) != n_in or any(len(row) != rate for row in raw_decoder):
        raise ShapeMismatch(f"decoder must be {n_in}x{rate}")
    decoder = Matrix.build(fld, raw_decoder, ncols=rate)
    if len(raw_b) != rate or any(len(row) != rate for row in raw_b):
        raise ShapeMismatch(f"B must be {rate}x{rate}")
    mixing = Matrix.build(fld, raw_b, ncols=rate)
    base = SumCode(fld, rate, source_matrices, local_coeffs, decoder)
    code = secure_code(base, mixing, r)
    stored = doc.get("global_vectors")
    if stored is not None:
        recomputed = global_vectors(base, net)
        try:
            for eid in net.order:
                expect = recomputed[eid]
                got = stored.get(eid)
                if got is None or tuple(int(x) % fld.q for x in got) != expect:
                    raise MalformedInput(f"stored global vector for {eid!r} fails the audit")
        except (TypeError, ValueError, AttributeError) as exc:
            raise MalformedInput(f"bad global vectors: {exc}") from None
    return code


def load_code_file(path: str, net: Network) -> SecureCode:
    with open(path, "r", encoding="utf-8") as fh:
        return load_code(json.load(fh), net)
