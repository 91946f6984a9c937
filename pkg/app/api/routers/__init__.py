from app.api.routers.behaviour import router as behaviour_router
from app.api.routers.hankel import router as hankel_router
from app.api.routers.properties import router as properties_router
from app.api.routers.synthesis import router as synthesis_router
