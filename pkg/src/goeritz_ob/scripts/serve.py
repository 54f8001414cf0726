"""Script to serve the Goeritz check API."""

import logging

import uvicorn

from goeritz_ob.config import get_settings


def main():
    """Run the FastAPI server."""
    settings = get_settings()
    logging.basicConfig(level=settings.log_level)

    print("Starting goeritz-ob API...")
    print(f"API: http://localhost:{settings.api_port}/health")
    print(f"Docs: http://localhost:{settings.api_port}/docs")
    print()

    uvicorn.run(
        "goeritz_ob.api.main:app",
        host=settings.api_host,
        port=settings.api_port,
    )


if __name__ == "__main__":
    main()
