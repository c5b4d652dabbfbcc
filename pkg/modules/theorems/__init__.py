from .base import BaseTheorem, NerveContext
from .disks import DiskTheorem
from .elementary import ElementaryTheorem
from .flag_sphere import FlagSphereTheorem
from .full_link import FullLinkTheorem
from .manifold_nerve import ManifoldNerveTheorem
from .sphere_nerve import SphereNerveTheorem

THEOREMS = (
    SphereNerveTheorem(),
    ElementaryTheorem(),
    FlagSphereTheorem(),
    FullLinkTheorem(),
    ManifoldNerveTheorem(),
    DiskTheorem(),
)

# the first usable record in this order authorizes a Betti computation
PRIORITY = ("theorem1", "elementary", "flag_s3", "theorem2", "theorem3", "disk")
