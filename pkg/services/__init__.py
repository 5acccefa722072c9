# -*- coding: utf-8 -*-
"""
Computation services: exact linear algebra, the catalog, tensor and homology
presentations, the derived-dimension-one recognizer, closed forms and the
verification sweep. Import submodules directly.
"""
