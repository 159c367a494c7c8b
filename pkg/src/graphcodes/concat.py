"""Concatenated layered storage codes.

A concatenated code for (n, k, d = n-1) keeps one layered code of size
v = k+1 holding the bulk of the data plus smaller layered codes whose
injected layer checks carry Johnson graph code syndromes of the larger
ones.  A data collector reading k nodes recovers the under-accessed
layers shell by shell: the syndrome stored at a fully-accessed sublayer
L_w, together with the already recovered shells, completes one helper
codeword per stored vector and delivers one symbol to every layer above
L_w.  Multiplicities are chosen so that supply matches demand in every
column of the intersection census; for v = k+1 the parameters meet the
MSR point M = k*alpha, alpha = (n-k)^k, beta = (n-k)^(k-1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from graphcodes.combinat import Layer, ball_size, layer, shell_index
from graphcodes.field import FieldSpec, field_make
from graphcodes.jgc import JGCSpec, dual, erasure_decode, syndrome_of
from graphcodes.layered import LayeredSpec, encode_layered, layer_sum


def series_multiplicities(v: int, ell: int) -> List[int]:
    """Copy counts (a_0, ..., a_{v-1}) per component size v-i.

    Power series coefficients of 1/((1 - ell*t) (1+t)^ell); these are
    the unique multiplicities for which fully-accessed layers compensate
    under-accessed layers in every census column but the last.
    """
    # denominator g(t) = (1 - ell t)(1+t)^ell, then invert the series
    g = [comb(ell, i) for i in range(ell + 1)]
    g = [c - (ell * g[i - 1] if i else 0) for i, c in enumerate(g + [0])]
    a = [1]
    for i in range(1, v):
        a.append(-sum(g[j] * a[i - j] for j in range(1, min(i, len(g) - 1) + 1)))
    return a


class ConcatParams:
    """Aggregate storage parameters of a concatenated code."""

    def __init__(self, n: int, v: int, k: int):
        ell = n - 1 - k
        if ell < 0:
            raise ValueError("need k <= n-1")
        a = series_multiplicities(v, ell)
        self.n, self.v, self.k, self.ell = n, v, k, ell
        self.counts = {v - i: a[i] for i in range(v) if a[i]}
        self.M1 = sum(c * comb(n, u) * (u - 1) for u, c in self.counts.items())
        self.M0 = sum(
            c * comb(n - k, u) * (u - 1)
            for u, c in self.counts.items() if 2 <= u < v
        )
        self.M = self.M1 - self.M0
        self.alpha = sum(c * comb(n - 1, u - 1) for u, c in self.counts.items())
        self.beta = sum(
            c * comb(n - 2, u - 2) for u, c in self.counts.items() if u >= 2
        )

    def __repr__(self) -> str:
        return (
            f"ConcatParams(n={self.n}, v={self.v}, k={self.k}, M={self.M}, "
            f"alpha={self.alpha}, beta={self.beta})"
        )


def concat_params(n: int, v: int, k: int) -> ConcatParams:
    return ConcatParams(n, v, k)


def balance_table(n: int, v: int, k: int) -> Tuple[List[Dict[int, int]], List[int]]:
    """Per-size supply/demand rows over census columns c = k .. 0.

    Row u has +1 in column u (each fully-accessed copy donates its
    injected check per sublayer) and -C(n-k, u-c)(u-1-c) in columns
    c <= u-2 (symbols missing per sublayer).  Weighted by the copy
    counts, every column sums to zero except column 0, which sums to
    -M0.
    """
    params = concat_params(n, v, k)
    rows = []
    for u in range(v, 0, -1):
        row: Dict[int, int] = {}
        if u <= k:
            row[u] = 1
        for c in range(min(u - 2, k), -1, -1):
            need = comb(n - k, u - c) * (u - 1 - c)
            if need:
                row[c] = -need
        rows.append(row)
    sums = []
    for c in range(k, -1, -1):
        total = 0
        for u, row in zip(range(v, 0, -1), rows):
            total += params.counts.get(u, 0) * row.get(c, 0)
        sums.append(total)
    return rows, sums


def demand_row(n: int, v: int, k: int) -> List[int]:
    """Symbols to deliver per shell: j times the shell-j census."""
    out = []
    for j in range(1, k + 1):
        size = comb(k, k - j) * (comb(n - k, v - k + j) if v - k + j >= 0 else 0)
        if size:
            out.append(j * size)
    return out


def subgraph_code_table(n: int, v: int, k: int) -> List[Dict[str, int]]:
    """Johnson graph codes on the subgraphs J(n-w, v-w), one row per
    radius with a nonempty shell, with the shell size and [length, dim]."""
    rows = []
    for w in range(v - 2, 0, -1):
        n2, v2, k2 = n - w, v - w, k - w
        length = comb(n2, v2)
        prev = 0
        for r in range(min(v2, k2, n2 - v2, n2 - k2) + 1):
            size = ball_size(n2, v2, k2, r)
            if size == prev:
                continue
            rows.append({
                "w": w, "r": r, "shell": size - prev,
                "length": length, "dim": size,
            })
            prev = size
    return rows


def parse_scenario(text: str) -> Tuple[int, ...]:
    try:
        ws = tuple(int(p) for p in text.split("-"))
    except ValueError:
        raise ValueError(f"bad scenario {text!r}, expected like '3-2-1'")
    if not ws or any(w < 1 for w in ws):
        raise ValueError(f"bad scenario {text!r}, sizes must be positive")
    return ws


def cascade_scenario(n: int, v: int, k: int) -> str:
    """The scenario that transfers data only between layers in the same
    census column: round r helps from sublayers of size v-1-r."""
    return "-".join(str(v - 1 - r) for r in range(1, _num_rounds(n, v, k) + 1))


def _num_rounds(n: int, v: int, k: int) -> int:
    rounds = 0
    for j in range(1, k + 1):
        if v - k + j >= 0 and comb(k, k - j) * comb(n - k, v - k + j) > 0:
            rounds = j
    return rounds


def _round_code_shape(n: int, v: int, k: int, w: int, r: int) -> Tuple[int, int, int, int]:
    """(n', v', k', t) of the helper code for round r from size-w sublayers."""
    n2, v2, k2 = n - w, v - w, k - w
    t = min(v2, k2) - (r - 1)
    return n2, v2, k2, t


def _shape_codim(shape: Tuple[int, int, int, int]) -> int:
    n2, v2, k2, t = shape
    return comb(n2, v2) - ball_size(n2, v2, k2, min(v2, k2) - t)


class ScenarioLayout:
    """Copy counts and storage parameters for one helper scenario.

    Round r recovers shell r using syndromes of the helper code on
    J(n-w_r, v-w_r) stored at size-w_r sublayers; the multiplicities
    m_r solve the shell-by-shell supply equations
    sum_{r <= j} m_r C(k-j, w_r) = j and are rescaled by the smallest
    integer making everything integral (the top copy count scales too).
    """

    def __init__(self, n: int, v: int, k: int, ws: Sequence[int]):
        ws = tuple(ws)
        rounds = _num_rounds(n, v, k)
        if len(ws) != rounds:
            raise ValueError(f"scenario needs {rounds} rounds, got {len(ws)}")
        self.n, self.v, self.k, self.ws = n, v, k, ws
        mult: List[Fraction] = []
        for j in range(1, rounds + 1):
            supplied = sum(
                m * comb(k - j, ws[r - 1]) for r, m in enumerate(mult, start=1)
            )
            cap = comb(k - j, ws[j - 1])
            if cap == 0:
                raise ValueError(f"round {j} sublayer size {ws[j - 1]} too large")
            m = Fraction(j - supplied, cap)
            if m <= 0:
                raise ValueError(f"scenario {ws} oversupplies shell {j}")
            mult.append(m)
        self.multiplicities = tuple(mult)
        self.shapes = [
            _round_code_shape(n, v, k, ws[r - 1], r) for r in range(1, rounds + 1)
        ]
        self.codims = [_shape_codim(s) for s in self.shapes]
        scale = lcm(*(m.denominator for m in mult)) if mult else 1
        self.scale = scale
        counts: Dict[int, Fraction] = {v: Fraction(1)}
        for w, m, codim in zip(ws, mult, self.codims):
            counts[w] = counts.get(w, Fraction(0)) + m * codim
        for u in range(v - 1, 2, -1):
            cnt = counts.get(u)
            if not cnt:
                continue
            for c in range(u - 2, 0, -1):
                codim = _shape_codim((n - c, u - c, k - c, 1))
                counts[c] = counts.get(c, Fraction(0)) + cnt * (u - 1 - c) * codim
        self.counts = {}
        for u, cnt in counts.items():
            scaled = cnt * scale
            if scaled.denominator != 1:
                raise AssertionError("scale did not clear denominators")
            if scaled:
                self.counts[u] = int(scaled)
        dims = {
            u: ball_size(n, u, k, u - 1) for u in self.counts if 2 <= u < v
        }
        self.M = self.counts[v] * comb(n, v) * (v - 1) + sum(
            cnt * (u - 1) * dims[u]
            for u, cnt in self.counts.items() if 2 <= u < v
        )
        self.alpha = sum(
            cnt * comb(n - 1, u - 1) for u, cnt in self.counts.items()
        )
        self.beta = sum(
            cnt * comb(n - 2, u - 2)
            for u, cnt in self.counts.items() if u >= 2
        )

    @property
    def name(self) -> str:
        return "-".join(str(w) for w in self.ws)

    def is_cascade(self) -> bool:
        return all(w == self.v - 1 - r for r, w in enumerate(self.ws, start=1))


def admissible_scenarios(n: int, v: int, k: int) -> List[Tuple[int, ...]]:
    """Nonincreasing sublayer sizes with positive multiplicities."""
    rounds = _num_rounds(n, v, k)
    out = []
    for ws in itertools.product(*(range(1, v - 1 - r + 1)
                                  for r in range(1, rounds + 1))):
        if any(ws[i] < ws[i + 1] for i in range(len(ws) - 1)):
            continue
        try:
            ScenarioLayout(n, v, k, ws)
        except ValueError:
            continue
        out.append(ws)
    return out


def scenario_table(n: int, v: int, k: int,
                   scenarios: Optional[Sequence[str]] = None) -> List[Dict]:
    """One row per scenario: copy counts by size and (M, alpha, beta)."""
    if scenarios is None:
        wss = admissible_scenarios(n, v, k)
    else:
        wss = [parse_scenario(s) for s in scenarios]
    rows = []
    for ws in wss:
        lay = ScenarioLayout(n, v, k, ws)
        rows.append({
            "scenario": lay.name,
            "counts": dict(lay.counts),
            "M": lay.M,
            "alpha": lay.alpha,
            "beta": lay.beta,
        })
    return rows


class _Component:
    __slots__ = ("u", "role")

    def __init__(self, u: int, role: Optional[Tuple[int, int, int, int]]):
        self.u = u
        # role = (source component id, round index within source, vector, entry)
        self.role = role


class _Round:
    """One helper round of a component: syndromes of ``code`` computed
    from sublayers of size c, m stored vectors per sublayer."""

    __slots__ = ("c", "m", "code", "dual", "codim", "deps")

    def __init__(self, c: int, m: int, code: JGCSpec, dual_code: JGCSpec):
        self.c = c
        self.m = m
        self.code = code
        self.dual = dual_code
        self.codim = dual_code.dim
        self.deps: List[int] = []


class ConcatCode:
    """A concatenated layered code ready for encoding and recovery.

    End-to-end encode/collect/repair supports the cascade scenario
    (helper data moves only between layers in the same census column)
    with a single top copy; other scenarios still get the full layout
    and parameter accounting through ScenarioLayout.
    """

    def __init__(self, n: int, v: int, k: int, q: int,
                 scenario: Optional[str] = None):
        if v != k + 1:
            raise ValueError(f"need v = k+1, got v={v}, k={k}")
        if q < n:
            raise ValueError(f"need q >= n, got q={q}, n={n}")
        if comb(n - k, v) > 0:
            raise ValueError(
                f"need v > n-k so that every layer meets the accessed "
                f"nodes, got v={v}, n-k={n - k}"
            )
        self.F = field_make(q)
        self.n, self.v, self.k = n, v, k
        self.ell = n - 1 - k
        if scenario is None:
            scenario = cascade_scenario(n, v, k)
        self.ws = parse_scenario(scenario) if scenario else ()
        self.layout = ScenarioLayout(n, v, k, self.ws)
        if not self.layout.is_cascade() or self.layout.scale != 1:
            raise ValueError(
                f"end-to-end coding implements cascade scenarios only; "
                f"{self.layout.name!r} has no column-local labeling"
            )
        self.lspec = {u: LayeredSpec(self.F, n, u) for u in range(1, v + 1)}
        self._codes: Dict[Tuple[int, int, int, int], Tuple[JGCSpec, JGCSpec]] = {}
        self._parities: Dict[Tuple[int, Layer], object] = {}

        # precodes: the u-1 data vectors of a size-u copy are codewords
        # of the graph code with radius u-1, so any k accessed nodes
        # determine them
        self.precode: Dict[int, Tuple[JGCSpec, JGCSpec]] = {}
        self.pre_info: Dict[int, List[Layer]] = {}
        A0 = tuple(range(k))
        for u in range(2, v):
            if not self.layout.counts.get(u):
                continue
            if _shape_codim((n, u, k, 1)) == 0:
                # every layer meets any k-set; the data vectors are free
                self.precode[u] = None
                self.pre_info[u] = list(self.lspec[u].layers)
                continue
            code, dcode = self._code(n, u, k, 1)
            self.precode[u] = (code, dcode)
            self.pre_info[u] = [
                L for L in code.vertices if shell_index(L, A0) <= code.r
            ]
        self.A0 = A0

        self.components: List[_Component] = [_Component(v, None)]
        self.rounds: Dict[int, List[_Round]] = {}
        queue = [0]
        while queue:
            cid = queue.pop(0)
            u = self.components[cid].u
            self.rounds[cid] = rds = self._component_rounds(u)
            for ridx, rd in enumerate(rds):
                for i in range(rd.m):
                    for e in range(rd.codim):
                        dep = len(self.components)
                        self.components.append(
                            _Component(rd.c, (cid, ridx, i, e)))
                        rd.deps.append(dep)
                        if rd.c >= 3:
                            queue.append(dep)
        self.counts = {}
        for comp in self.components:
            self.counts[comp.u] = self.counts.get(comp.u, 0) + 1
        if self.counts != self.layout.counts:
            raise AssertionError("component registry disagrees with layout")
        self.alpha = sum(comb(n - 1, u - 1) for u in
                         (c.u for c in self.components))
        self.offsets = []
        off = 0
        for comp in self.components:
            self.offsets.append(off)
            off += comb(n - 1, comp.u - 1)
        self.M = self.layout.M
        self.params = concat_params(n, v, k)

    # ----- helper code bookkeeping -----

    def _code(self, n2: int, v2: int, k2: int, t: int) -> Tuple[JGCSpec, JGCSpec]:
        key = (n2, v2, k2, t)
        if key not in self._codes:
            F = self.F
            base = [[F.pow(a, i) for a in range(n2)] for i in range(k2)]
            code = JGCSpec(F, base, v2, t)
            self._codes[key] = (code, dual(code))
        return self._codes[key]

    def _component_rounds(self, u: int) -> List["_Round"]:
        if u == self.v:
            pairs = [(w, m) for w, m in
                     zip(self.ws, (int(x) for x in self.layout.multiplicities))]
        else:
            pairs = [(c, u - 1 - c) for c in range(u - 2, 0, -1)]
        rds = []
        for ridx, (c, m) in enumerate(pairs, start=1):
            if u == self.v:
                shape = self.layout.shapes[ridx - 1]
            else:
                shape = (self.n - c, u - c, self.k - c, 1)
            if _shape_codim(shape) == 0:
                # the radius ball already covers every layer above L_c
                continue
            code, dcode = self._code(*shape)
            rds.append(_Round(c, m, code, dcode))
        return rds

    # ----- labelings -----

    def _labeling(self, rd: _Round, L_c: Layer, i: int,
                  symbol) -> List[int]:
        """Helper codeword-shaped vector: one symbol per layer above L_c.

        Entry at the (relabeled) sublayer L' belongs to the layer
        L = L_c | L' and is the stored symbol at the i-th smallest node
        of L minus L_c; ``symbol(L, node)`` fetches stored values.
        """
        rest = [x for x in range(self.n) if x not in L_c]
        out = []
        for Lp in rd.code.vertices:
            nodes = [rest[j] for j in Lp]
            Lfull = layer(L_c + tuple(nodes))
            out.append(symbol(Lfull, nodes[i]))
        return out

    def _relabel_anchor(self, A: Layer, L_c: Layer) -> Layer:
        rest = [x for x in range(self.n) if x not in L_c]
        pos = {x: j for j, x in enumerate(rest)}
        return layer([pos[a] for a in A if a not in L_c])

    def _syndromes(self, cid: int, symbol) -> Dict[int, Dict[Layer, int]]:
        """Injected check values for all dependents of component cid."""
        out: Dict[int, Dict[Layer, int]] = {}
        for rd in self.rounds.get(cid, []):
            for dep in rd.deps:
                out[dep] = {}
            for L_c in self.lspec[rd.c].layers:
                for i in range(rd.m):
                    lab = self._labeling(rd, L_c, i, symbol)
                    s = syndrome_of(rd.code, lab, rd.dual)
                    for e in range(rd.codim):
                        out[rd.deps[i * rd.codim + e]][L_c] = s[e]
        return out

    # ----- encoding -----

    def encode(self, payload: Sequence[int]) -> List[List[int]]:
        """Node arrays (n lists of alpha symbols) for M payload symbols."""
        F = self.F
        if len(payload) != self.M:
            raise ValueError(f"expected {self.M} payload symbols, "
                             f"got {len(payload)}")
        for x in payload:
            F.check(x)
        pos = 0
        injected: Dict[int, Dict[Layer, int]] = {}
        comp_nodes = []
        for cid, comp in enumerate(self.components):
            u = comp.u
            spec = self.lspec[u]
            inj = injected.get(cid, {})
            if u == self.v:
                data = list(payload[pos:pos + spec.M1])
                pos += spec.M1
            elif u == 1:
                data = []
            else:
                pre = self.precode[u]
                dim_u = len(self.pre_info[u])
                words = []
                for _ in range(u - 1):
                    seg = payload[pos:pos + dim_u]
                    pos += dim_u
                    known = dict(zip(self.pre_info[u], seg))
                    if pre is not None:
                        word = erasure_decode(pre[0], self.A0, known,
                                              dual_code=pre[1])
                        known = {L: pre[0].coord(word, L)
                                 for L in spec.layers}
                    words.append(known)
                data = [words[j][L]
                        for L in spec.layers for j in range(u - 1)]
            nodes = encode_layered(spec, data, inj)
            comp_nodes.append(nodes)
            if self.rounds.get(cid):
                def symbol(L, node, nodes=nodes, spec=spec):
                    return nodes[node][spec.slot[(L, node)]]
                injected.update(self._syndromes(cid, symbol))
        out = [[0] * self.alpha for _ in range(self.n)]
        for cid, nodes in enumerate(comp_nodes):
            off = self.offsets[cid]
            for i in range(self.n):
                out[i][off:off + len(nodes[i])] = nodes[i]
        return out

    # ----- data collection -----

    def collect(self, nodes: Sequence[Sequence[int]], A: Sequence[int]
                ) -> Tuple[List[int], List[Tuple[int, int]]]:
        """Payload back from the k nodes in A, with the read log.

        Only entries of nodes listed in A are touched; the log records
        every (node, offset) read.
        """
        F = self.F
        A = layer(A)
        if len(A) != self.k:
            raise ValueError(f"need exactly k={self.k} nodes, got {len(A)}")
        log = [(i, off) for i in A for off in range(self.alpha)]
        sA = set(A)
        values: List[Dict[Tuple[Layer, int], int]] = []
        for cid, comp in enumerate(self.components):
            spec = self.lspec[comp.u]
            off = self.offsets[cid]
            vals = {}
            for i in A:
                row = nodes[i]
                for L in spec.layers_at[i]:
                    vals[(L, i)] = row[off + spec.slot[(L, i)]]
            values.append(vals)

        injected: Dict[int, Dict[Layer, int]] = {}
        for cid, comp in enumerate(self.components):
            u = comp.u
            spec = self.lspec[u]
            vals = values[cid]
            inj = injected.get(cid, {})
            if u == 1:
                for L in spec.layers:
                    if L[0] not in sA:
                        vals[(L, L[0])] = inj[L]
            else:
                self._recover_component(cid, values, A, inj)
            if self.rounds.get(cid):
                def symbol(L, node, vals=vals):
                    return vals[(L, node)]
                injected.update(self._syndromes(cid, symbol))

        payload = []
        for cid, comp in enumerate(self.components):
            u = comp.u
            spec = self.lspec[u]
            vals = values[cid]
            if u == self.v:
                for L in spec.layers:
                    payload.extend(vals[(L, j)] for j in L[:-1])
            elif u >= 2:
                for j in range(u - 1):
                    payload.extend(vals[(L, L[j])] for L in self.pre_info[u])
        return payload, log

    def _parity_fill(self, spec: LayeredSpec, vals, inj, layers) -> None:
        F = self.F
        for L in layers:
            missing = [j for j in L if (L, j) not in vals]
            if not missing:
                continue
            if len(missing) > 1:
                raise AssertionError(f"layer {L} still has {missing} unknown")
            total = 0
            for j in L:
                if j != missing[0]:
                    total = F.add(total, vals[(L, j)])
            vals[(L, missing[0])] = F.sub(inj.get(L, 0), total)

    def _recover_component(self, cid: int, values, A: Layer, inj) -> None:
        F = self.F
        u = self.components[cid].u
        spec = self.lspec[u]
        vals = values[cid]
        sA = set(A)
        by_c: Dict[int, List[Layer]] = {}
        for L in spec.layers:
            by_c.setdefault(len(sA.intersection(L)), []).append(L)
        # layers meeting A in u or u-1 nodes close with their parity
        self._parity_fill(spec, vals, inj, by_c.get(u, []) + by_c.get(u - 1, []))
        for rd in self.rounds.get(cid, []):
            for L_c in itertools.combinations(A, rd.c):
                L_c = layer(L_c)
                A2 = self._relabel_anchor(A, L_c)
                rest = [x for x in range(self.n) if x not in L_c]
                for i in range(rd.m):
                    s = []
                    for e in range(rd.codim):
                        dep = rd.deps[i * rd.codim + e]
                        dspec = self.lspec[rd.c]
                        total = 0
                        for j in L_c:
                            total = F.add(total, values[dep][(L_c, j)])
                        s.append(total)
                    known = {}
                    for Lp in rd.code.vertices:
                        if shell_index(Lp, A2) <= rd.code.r:
                            nodes_ = [rest[j] for j in Lp]
                            Lfull = layer(L_c + tuple(nodes_))
                            known[Lp] = vals[(Lfull, nodes_[i])]
                    word = self._decode(rd, A2, known, s)
                    for p, Lp in enumerate(rd.code.vertices):
                        if shell_index(Lp, A2) > rd.code.r:
                            nodes_ = [rest[j] for j in Lp]
                            Lfull = layer(L_c + tuple(nodes_))
                            vals[(Lfull, nodes_[i])] = word[p]
            self._parity_fill(spec, vals, inj, by_c.get(rd.c, []))
        if u < self.v and by_c.get(0):
            if self.precode[u] is None:
                raise AssertionError("missed layers despite trivial precode")
            code, dcode = self.precode[u]
            for j in range(u - 1):
                known = {L: vals[(L, L[j])] for L in code.vertices
                         if shell_index(L, A) <= code.r}
                word = erasure_decode(code, A, known, dual_code=dcode)
                for L in by_c[0]:
                    vals[(L, L[j])] = code.coord(word, L)
            self._parity_fill(spec, vals, inj, by_c[0])
        for L in spec.layers:
            for j in L:
                if (L, j) not in vals:
                    raise AssertionError(f"layer {L} not recovered")

    def _decode(self, rd: _Round, A2: Layer, known, syndrome) -> List[int]:
        return erasure_decode(rd.code, A2, known, syndrome=syndrome,
                              dual_code=rd.dual)

    # ----- repair -----

    def repair(self, nodes: Sequence[Sequence[int]], failed: int
               ) -> Tuple[List[int], Dict[int, int]]:
        """Rebuild the failed node's column from the other n-1 nodes.

        Helper j sends, for every copy of size >= 2, its symbols at
        layers containing both j and the failed node: exactly beta
        symbols per helper.  The failed symbols follow from the layer
        checks, recomputing injected values from already rebuilt copies.
        """
        F = self.F
        if not 0 <= failed < self.n:
            raise ValueError(f"bad node index {failed}")
        counts = {j: 0 for j in range(self.n) if j != failed}
        values: List[Dict[Tuple[Layer, int], int]] = []
        for cid, comp in enumerate(self.components):
            spec = self.lspec[comp.u]
            off = self.offsets[cid]
            vals = {}
            if comp.u >= 2:
                for L in spec.layers_at[failed]:
                    for j in L:
                        if j == failed:
                            continue
                        vals[(L, j)] = nodes[j][off + spec.slot[(L, j)]]
                        counts[j] += 1
            values.append(vals)

        syn_cache: Dict[Tuple[int, int, Layer, int], List[int]] = {}

        def injected_at(cid: int, L: Layer) -> int:
            role = self.components[cid].role
            if role is None:
                return 0
            src, ridx, i, e = role
            rd = self.rounds[src][ridx]
            key = (src, ridx, L, i)
            if key not in syn_cache:
                sspec = self.lspec[self.components[src].u]

                def symbol(Lf, node):
                    if node == failed:
                        return values[src][(Lf, failed)]
                    return values[src][(Lf, node)]

                lab = self._labeling(rd, L, i, symbol)
                syn_cache[key] = syndrome_of(rd.code, lab, rd.dual)
            return syn_cache[key][e]

        for cid, comp in enumerate(self.components):
            spec = self.lspec[comp.u]
            vals = values[cid]
            for L in spec.layers_at[failed]:
                s = injected_at(cid, L)
                total = 0
                for j in L:
                    if j != failed:
                        total = F.add(total, vals[(L, j)])
                vals[(L, failed)] = F.sub(s, total)

        column = [0] * self.alpha
        for cid, comp in enumerate(self.components):
            spec = self.lspec[comp.u]
            off = self.offsets[cid]
            for L in spec.layers_at[failed]:
                column[off + spec.slot[(L, failed)]] = values[cid][(L, failed)]
        return column, counts


def build_concat(n: int, v: int, k: int, q: int,
                 scenario: Optional[str] = None) -> ConcatCode:
    """Cascade-scenario concatenated code over GF(q), v = k+1."""
    return ConcatCode(n, v, k, q, scenario=scenario)
