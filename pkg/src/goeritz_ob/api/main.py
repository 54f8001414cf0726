"""FastAPI application for the Goeritz checks."""

from fastapi import FastAPI

from goeritz_ob import __version__
from goeritz_ob.api.routes.example import router as example_router
from goeritz_ob.api.routes.goeritz import router as goeritz_router
from goeritz_ob.api.routes.words import router as words_router


def create_app() -> FastAPI:
    """Create and configure the FastAPI application."""
    app = FastAPI(
        title="goeritz-ob API",
        description="Word, diagram and Goeritz group checks for open books",
        version=__version__,
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    app.include_router(words_router)
    app.include_router(goeritz_router)
    app.include_router(example_router)
    return app


# Create app instance for uvicorn
app = create_app()
