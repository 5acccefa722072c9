# -*- coding: utf-8 -*-
from . import graded
from . import superalgebra
from . import catalog_key
from . import verification_record
