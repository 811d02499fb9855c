from fastapi import FastAPI

from app.routers import expand, genus, lift, verify

api = FastAPI(title="Jacobi forms and Siegel lifts", version="1.0.0")
api.include_router(expand.router)
api.include_router(genus.router)
api.include_router(lift.router)
api.include_router(verify.router)


@api.get("/")
def read_root():
    return {"message": "Jacobi forms and Siegel lifts"}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(api, host="127.0.0.1", port=8000)
