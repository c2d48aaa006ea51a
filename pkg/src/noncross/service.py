"""HTTP facade over the engine.

Every computation the CLI offers is a POST with a typed request and
response; the CLI itself talks to this application in process, so the
service is the single entry point for sequences, verification suites,
and the enumeration oracle.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, oracle, suites
from .report import CheckResult
from .sequences import (
    IdentityId,
    SequenceId,
    f_value,
    n_closed,
    n_direct,
    n_gf_series,
    n_lemma,
    verify_identity,
)

app = FastAPI(title="noncross", version=__version__)

N_METHODS = ("direct", "lemma", "gf", "closed")
F_METHODS = ("sum", "gf", "closed")


class SeqEntry(BaseModel):
    n: int
    value: int


class SeqRequest(BaseModel):
    sequence: str
    start: int
    stop: int
    method: str = "closed"


class SeqResponse(BaseModel):
    sequence: str
    method: str
    values: list[SeqEntry]


class CheckModel(BaseModel):
    check: str
    params: dict
    status: str
    lhs: str | None = None
    rhs: str | None = None
    location: str | None = None

    @classmethod
    def from_result(cls, r: CheckResult) -> CheckModel:
        return cls(**r.to_dict())


class VerifyRequest(BaseModel):
    suite: str
    order: int | None = None
    n_max: int | None = None
    a_max: int | None = None
    m_max: int | None = None
    n_min: int | None = None
    r: int | None = None
    i: int | None = None
    j: int | None = None
    k: int | None = None
    l: int | None = None
    instances: int | None = None
    seed: int = 0


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckModel]


class OracleRequest(BaseModel):
    to: int = Field(default=8, ge=1)
    edges: bool = False


class OracleRow(BaseModel):
    n: int
    connected: int
    formula: int
    edges: int | None = None
    edges_formula: int | None = None
    match: bool


class OracleResponse(BaseModel):
    passed: bool
    rows: list[OracleRow]


class AllRequest(BaseModel):
    order: int = 60
    oracle_to: int = 8
    congruence_to: int = 2187
    agree_to: int = 60
    f_to: int = 40
    kummer_n: int = 30
    kummer_a: int = 20
    instances: int = 100
    seed: int = 0


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


def _n_value(n: int, method: str) -> int:
    if method == "direct":
        if n < 2:
            raise HTTPException(400, "method 'direct' is defined for n >= 2")
        return n_direct(n)
    if method == "lemma":
        if n < 2:
            raise HTTPException(400, "method 'lemma' reaches N_n only for n >= 2")
        return n_lemma(n - 1)
    if method == "closed":
        return n_closed(n)
    return n_gf_series(n - 1).coeff(n - 1)


@app.post("/seq", response_model=SeqResponse)
def seq(req: SeqRequest) -> SeqResponse:
    if req.stop < req.start:
        raise HTTPException(400, "empty range: stop < start")
    try:
        sid = SequenceId(req.sequence)
    except ValueError:
        raise HTTPException(400, f"unknown sequence {req.sequence!r}")
    values: list[SeqEntry] = []
    if sid == SequenceId.N:
        if req.method not in N_METHODS:
            raise HTTPException(400, f"N supports methods {N_METHODS}")
        if req.start < 1:
            raise HTTPException(400, "N starts at n = 1")
        for n in range(req.start, req.stop + 1):
            values.append(SeqEntry(n=n, value=_n_value(n, req.method)))
    else:
        if req.method not in F_METHODS:
            raise HTTPException(400, f"{sid.value} supports methods {F_METHODS}")
        if req.start < 0:
            raise HTTPException(400, f"{sid.value} starts at n = 0")
        for n in range(req.start, req.stop + 1):
            try:
                values.append(SeqEntry(n=n, value=f_value(sid, n, req.method)))
            except ValueError as exc:
                raise HTTPException(400, str(exc))
    return SeqResponse(sequence=sid.value, method=req.method, values=values)


def _or(value: int | None, default: int) -> int:
    return default if value is None else value


def _run_suite(req: VerifyRequest) -> list[CheckResult]:
    name = req.suite
    if name == "kummer":
        return suites.suite_kummer(_or(req.n_max, 30), _or(req.a_max, 20))
    if name == "congruence":
        return suites.suite_congruence(_or(req.n_max, 2187), order=_or(req.order, 100))
    if name == "identities":
        return suites.suite_identities(_or(req.order, 30))
    if name == "lagrange":
        return suites.suite_lagrange(_or(req.instances, 100), _or(req.order, 15), req.seed)
    if name == "agreement":
        return suites.suite_agreement(_or(req.n_max, 60), _or(req.m_max, 40))
    try:
        ident = IdentityId(name)
    except ValueError:
        raise HTTPException(400, f"unknown suite or identity {name!r}")
    order = _or(req.order, 30)
    if ident == IdentityId.E_A1:
        params: tuple[int, ...] = (_or(req.r, 0), _or(req.i, 0))
    elif ident == IdentityId.E_2A:
        params = (_or(req.r, 1),)
    elif ident == IdentityId.E_HJKL:
        if req.j is None or req.k is None or req.l is None:
            raise HTTPException(400, "e-hjkl needs j, k, l")
        params = (req.j, req.k, req.l)
    elif ident == IdentityId.KUMMER:
        params = (_or(req.n_max, 30), _or(req.a_max, 20))
    elif ident == IdentityId.T_RELATIONS:
        params = (_or(req.n_min, 0), _or(req.n_max, 12))
    elif ident in (IdentityId.FACT_ODD, IdentityId.FACT_EVEN):
        params = (_or(req.m_max, 15),)
    elif ident == IdentityId.E_MH:
        params = (_or(req.n_max, order),)
    else:
        params = ()
    return [verify_identity(ident, params, order)]


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    checks = _run_suite(req)
    return VerifyResponse(
        suite=req.suite,
        passed=all(c.passed for c in checks),
        checks=[CheckModel.from_result(c) for c in checks],
    )


@app.post("/oracle", response_model=OracleResponse)
def run_oracle(req: OracleRequest) -> OracleResponse:
    rows: list[OracleRow] = []
    ok = True
    for n in range(1, req.to + 1):
        try:
            stats = oracle.enumerate_graphs(n)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        formula = n_closed(n)
        row = OracleRow(
            n=n,
            connected=stats.connected_count,
            formula=formula,
            match=stats.connected_count == formula,
        )
        if req.edges and n >= 2:
            expect = f_value(SequenceId.F2, n - 1, "sum")
            row.edges = stats.total_edges
            row.edges_formula = expect
            row.match = row.match and stats.total_edges == expect
        ok = ok and row.match
        rows.append(row)
    return OracleResponse(passed=ok, rows=rows)


@app.post("/all", response_model=VerifyResponse)
def run_all(req: AllRequest) -> VerifyResponse:
    checks = suites.suite_all(
        order=req.order,
        oracle_to=req.oracle_to,
        congruence_to=req.congruence_to,
        agree_to=req.agree_to,
        f_to=req.f_to,
        kummer_n=req.kummer_n,
        kummer_a=req.kummer_a,
        instances=req.instances,
        seed=req.seed,
    )
    return VerifyResponse(
        suite="all",
        passed=all(c.passed for c in checks),
        checks=[CheckModel.from_result(c) for c in checks],
    )
