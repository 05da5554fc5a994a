from fastapi import APIRouter

from core.schemas import CompareRequest, EvaluateRequest, ProfileRequest, WeightsRequest, WeightsResponse
from evaluation import weighting
from evaluation.analysis import evaluate_suite
from evaluation.models import DatasetProfile, MetricReport
from evaluation.profile import profile_labels

router = APIRouter(tags=["evaluation"])


@router.post("/evaluate")
async def evaluate(request: EvaluateRequest) -> MetricReport:
    return evaluate_suite([request.to_run()], request.weights, request.metrics)


@router.post("/compare")
async def compare(request: CompareRequest) -> MetricReport:
    return evaluate_suite([run.to_run() for run in request.runs], request.weights, request.metrics)


@router.post("/weights")
async def weights(request: WeightsRequest) -> WeightsResponse:
    vector = weighting.build(request.spec, request.labels)
    return WeightsResponse(scheme=request.spec.describe(), weights=vector.as_dict())


@router.post("/profile")
async def profile(request: ProfileRequest) -> DatasetProfile:
    return profile_labels(request.labels)
