from fastapi import APIRouter

from app.routers.api import evaluation, health

router = APIRouter(prefix="/api")
router.include_router(health.router)
router.include_router(evaluation.router)
