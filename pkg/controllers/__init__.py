# -*- coding: utf-8 -*-
from . import expression_parser
from . import algebra_file
from . import cli
