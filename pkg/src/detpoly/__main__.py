#!/usr/bin/env python3

from .main import main

if __name__ == "__main__":
    main()
