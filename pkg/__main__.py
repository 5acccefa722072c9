# -*- coding: utf-8 -*-
from .controllers.cli import main

if __name__ == "__main__":
    main(prog_name="supertensor")
