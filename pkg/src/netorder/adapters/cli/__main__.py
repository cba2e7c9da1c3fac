from __future__ import annotations

from netorder.adapters.cli.app import main

__all__: list[str] = ["main"]

if __name__ == "__main__":
    raise SystemExit(main())
