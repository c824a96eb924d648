"""HTTP front end: one POST endpoint per operation, wrapping the shared
report builders. Run with `uvicorn cslplane.service:app`.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .errors import DomainError, RecompositionError, UsageError
from .reports import (
    build_classify,
    build_decompose,
    build_enumerate,
    build_reflection,
    build_rotation,
    build_verify,
)
from .schemas import (
    ClassifyRequest,
    DecomposeRequest,
    EnumerateRequest,
    ReflectionRequest,
    Report,
    RotationRequest,
    VerifyRequest,
)

app = FastAPI(
    title="planar coincidence lattice service",
    version=__version__,
    description=(
        "Exact characterization of coincidence site lattices of planar "
        "lattices: classification, mirror and rotation matrices, sigma "
        "indices, reflection-pair decomposition, and enumeration."
    ),
)


@app.exception_handler(UsageError)
async def usage_error_handler(request: Request, exc: UsageError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(DomainError)
async def domain_error_handler(request: Request, exc: DomainError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(RecompositionError)
async def recomposition_error_handler(request: Request, exc: RecompositionError):
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/classify", response_model=Report)
def classify_endpoint(request: ClassifyRequest) -> Report:
    return build_classify(request)


@app.post("/rotation", response_model=Report)
def rotation_endpoint(request: RotationRequest) -> Report:
    return build_rotation(request)


@app.post("/reflection", response_model=Report)
def reflection_endpoint(request: ReflectionRequest) -> Report:
    return build_reflection(request)


@app.post("/decompose", response_model=Report)
def decompose_endpoint(request: DecomposeRequest) -> Report:
    return build_decompose(request)


@app.post("/enumerate", response_model=Report)
def enumerate_endpoint(request: EnumerateRequest) -> Report:
    return build_enumerate(request)


@app.post("/verify", response_model=Report)
def verify_endpoint(request: VerifyRequest) -> Report:
    return build_verify(request)
