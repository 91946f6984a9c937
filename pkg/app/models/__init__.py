from app.models.behaviour import *
from app.models.matrix import *
from app.models.problem import *
from app.models.report import *
from app.models.result import *
from app.models.signal import *
from app.models.system import *
