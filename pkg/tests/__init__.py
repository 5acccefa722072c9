from . import common
from . import test_exact_linalg
from . import test_superalgebra
from . import test_catalog
from . import test_tensor_homology
from . import test_formulas
from . import test_verification
from . import test_cli
