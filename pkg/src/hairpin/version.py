from __future__ import annotations

import importlib.metadata


__all__ = ["tag", "version"]


# When tagging a release, set `released = True`.
# After tagging a release, set `released = False` and increment `tag`.

released = True

tag = version = "1.0.0"


if not released:  # pragma: no cover
	try:
		version = importlib.metadata.version("hairpin-completion")
	except importlib.metadata.PackageNotFoundError:
		version = f"{tag}.dev0"
