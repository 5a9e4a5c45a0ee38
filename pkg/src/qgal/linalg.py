"""Exact linear algebra over the scalar fields.

Sparse rows are dicts keyed by an arbitrary hashable variable.  The
incremental reducer is what the Haar solver feeds equations into; the
nullspace routine backs the cotensor kernel computation.  Rows over Q(q)
are content-stripped after cross-multiplication so intermediate
coefficients stay small (fraction-free style elimination).
"""

from __future__ import annotations

from .scalars import S_ONE, S_ZERO, ScalarC, ScalarQ


class LinearSolveError(Exception):
    pass


class InconsistentSystemError(LinearSolveError):
    pass


class NonUniqueSolutionError(LinearSolveError):
    pass


def _strip_content(row, rhs=None):
    """Divide a Q(q)-row by a common scalar so entries stay reduced.

    Normalizes the row so some entry is 1; purely cosmetic for general
    fields but keeps Q(q) numerators from swelling.
    """
    entries = list(row.values()) + ([rhs] if rhs is not None and not rhs.is_zero() else [])
    if not entries:
        return row, rhs
    pivot = entries[0]
    inv = pivot.inv()
    new_row = {k: inv * v for k, v in row.items()}
    new_rhs = None if rhs is None else inv * rhs
    return new_row, new_rhs


class RowReducer:
    """Incremental Gaussian elimination for Ax = b with sparse rows.

    Variables may be any hashable keys; `var_key` fixes the pivot
    preference order (smaller key = preferred pivot).
    """

    def __init__(self, var_key=None):
        self.var_key = var_key or (lambda v: v)
        self.rows = {}  # pivot var -> (row dict, rhs)

    def _reduce(self, row, rhs):
        row = dict(row)
        while True:
            hit = None
            for var in row:
                if var in self.rows:
                    hit = var
                    break
            if hit is None:
                return row, rhs
            prow, prhs = self.rows[hit]
            c = row.pop(hit)
            for var, v in prow.items():
                if var == hit:
                    continue
                s = row.get(var, S_ZERO) + (-c) * v
                if s.is_zero():
                    row.pop(var, None)
                else:
                    row[var] = s
            rhs = rhs + (-c) * prhs

    def add_equation(self, row, rhs):
        """Add one equation sum(row[v]*x_v) = rhs; returns True if it
        carried new information."""
        row = {k: v for k, v in row.items() if not v.is_zero()}
        row, rhs = self._reduce(row, rhs)
        if not row:
            if not rhs.is_zero():
                raise InconsistentSystemError("0 = nonzero in linear system")
            return False
        pivot = min(row, key=self.var_key)
        c = row[pivot].inv()
        row = {k: c * v for k, v in row.items()}
        rhs = c * rhs
        # back-substitute into the existing rows
        for pvar, (prow, prhs) in list(self.rows.items()):
            f = prow.get(pivot)
            if f is None:
                continue
            new = dict(prow)
            del new[pivot]
            for var, v in row.items():
                if var == pivot:
                    continue
                s = new.get(var, S_ZERO) + (-f) * v
                if s.is_zero():
                    new.pop(var, None)
                else:
                    new[var] = s
            self.rows[pvar] = (new, prhs + (-f) * rhs)
        self.rows[pivot] = (row, rhs)
        return True

    def solution(self, variables):
        """Unique solution restricted to `variables`.

        Raises NonUniqueSolutionError when some variable is undetermined
        (its value would depend on free parameters).
        """
        out = {}
        undetermined = []
        for var in variables:
            entry = self.rows.get(var)
            if entry is None:
                undetermined.append(var)
                continue
            row, rhs = entry
            free = [v for v in row if v != var]
            if free:
                undetermined.append(var)
                continue
            out[var] = rhs
        if undetermined:
            raise NonUniqueSolutionError(
                f"{len(undetermined)} variables undetermined, e.g. {undetermined[0]!r}"
            )
        return out


def nullspace(rows, variables, var_key=None):
    """Basis of the solution space of a homogeneous sparse system.

    `rows` is an iterable of dicts var -> scalar; `variables` lists every
    variable (including those absent from all rows).  Returns reduced
    echelon basis vectors as dicts, pivots normalized to 1, ordered by
    their pivot variable.
    """
    key = var_key or (lambda v: v)
    variables = sorted(variables, key=key)
    reducer = RowReducer(var_key=key)
    zero = S_ZERO
    for row in rows:
        filtered = {k: v for k, v in row.items() if not v.is_zero()}
        if filtered:
            try:
                reducer.add_equation(filtered, _zero_like(next(iter(filtered.values()))))
            except InconsistentSystemError:  # cannot happen: rhs is 0
                raise
    pivots = set(reducer.rows)
    free = [v for v in variables if v not in pivots]
    basis = []
    for fvar in free:
        vec = {fvar: _one_like_var(rows, fvar)}
        for pvar, (prow, _rhs) in reducer.rows.items():
            c = prow.get(fvar)
            if c is not None:
                vec[pvar] = -c
        basis.append(vec)
    return basis


def _zero_like(sample):
    return ScalarC(S_ZERO) if isinstance(sample, ScalarC) else S_ZERO


def _one_like_var(rows, _var):
    for row in rows:
        for v in row.values():
            if isinstance(v, ScalarC):
                return ScalarC(S_ONE)
    return S_ONE


# -- dense matrices over scalars (small sizes only) -------------------------


def mat_identity(n, one=S_ONE):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]

def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            s = a[i][0] * b[0][j]
            for k in range(1, m):
                s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_conj_transpose(a):
    return [[a[j][i].conj() for j in range(len(a))] for i in range(len(a[0]))]


def mat_inv(a):
    """Inverse by Gauss-Jordan; raises on a singular matrix."""
    n = len(a)
    one = a[0][0] - a[0][0] + _one_like_entry(a)
    zero = one - one
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise LinearSolveError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inv()
        aug[col] = [inv * v for v in aug[col]]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f.is_zero():
                continue
            aug[r] = [x + (-f) * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _one_like_entry(a):
    return ScalarC(S_ONE) if isinstance(a[0][0], ScalarC) else S_ONE
