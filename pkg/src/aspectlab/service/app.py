"""FastAPI wiring for the labelling service."""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import PipelineError
from . import core, schemas


def create_app():
    app = FastAPI(
        title="aspectlab",
        version=__version__,
        description="Rule-based aspect term labelling, tagger training and "
                    "span evaluation over dependency-parsed review text.",
    )

    @app.exception_handler(PipelineError)
    @app.exception_handler(ValueError)
    async def bad_input(request: Request, exc: Exception):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return core.health()

    @app.get("/presets", response_model=schemas.PresetsResponse)
    def presets():
        return core.presets()

    @app.post("/clean", response_model=schemas.CleanResponse)
    def clean(req: schemas.CleanRequest):
        return core.clean(req)

    @app.post("/mine", response_model=schemas.MineResponse)
    def mine(req: schemas.MineRequest):
        return core.mine(req)

    @app.post("/label", response_model=schemas.LabelResponse)
    def label(req: schemas.LabelRequest):
        return core.label(req)

    @app.post("/baseline", response_model=schemas.EvalResponse)
    def baseline(req: schemas.BaselineRequest):
        return core.baseline(req)

    @app.post("/train", response_model=schemas.TrainResponse)
    def train(req: schemas.TrainRequest):
        return core.train_model(req)

    @app.post("/predict", response_model=schemas.PredictResponse)
    def predict(req: schemas.PredictRequest):
        return core.predict_labels(req)

    @app.post("/evaluate", response_model=schemas.EvalResponse)
    def evaluate(req: schemas.EvaluateRequest):
        return core.evaluate_labelled(req)

    return app


app = create_app()
