"""Code artifact files: a verified code serialized as JSON.

Layout (all positions and indices 1-based on the wire):

    {
      "version": 1,
      "design": {"alpha", "beta", "k", "t", "s", "r", "n",
                 "S": [[...]], "M0": ["0101", ...]},
      "field": {"m": 13, "poly": "0x201b"},
      "G": [["0", "1a2f", ...], ...],       # k rows of n hex symbols
      "claimed_d": 11,
      "seed": 0
    }

Loading re-runs the group-decodability and exact-distance verifiers by
default and rejects the file if either fails, so a loaded code is as
trustworthy as a freshly synthesized one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .codec import GdcCode
from .design import CodeDesign
from .errors import ArtifactError, GdcError
from .galois import BinaryField
from .synthesis import GeneratorMatrix, verify_distance_exact, verify_gdc

FORMAT_VERSION = 1


@dataclass(frozen=True)
class CodeArtifact:
    version: int
    code: GdcCode
    seed: int


def artifact_json(code: GdcCode, seed: int) -> dict:
    return {
        "version": FORMAT_VERSION,
        "design": code.design.to_json(),
        "field": code.field.to_json(),
        "G": code.generator.to_hex_rows(),
        "claimed_d": code.d,
        "seed": seed,
    }


def dumps_artifact(code: GdcCode, seed: int) -> str:
    # sorted keys + fixed indent make identical inputs byte-identical
    return json.dumps(artifact_json(code, seed), indent=2, sort_keys=True) + "\n"


def save_artifact(code: GdcCode, path: str | Path, seed: int) -> None:
    Path(path).write_text(dumps_artifact(code, seed))


def load_artifact(path: str | Path, verify: bool = True) -> CodeArtifact:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ArtifactError(f"cannot read artifact {path}: {e}") from e
    try:
        version = int(obj["version"])
        if version != FORMAT_VERSION:
            raise ArtifactError(f"unsupported artifact version {version}")
        design = CodeDesign.from_json(obj["design"])
        field = BinaryField.from_json(obj["field"])
        claimed_d = int(obj["claimed_d"])
        seed = int(obj["seed"])
        gen = GeneratorMatrix.from_hex_rows(
            field, obj["G"], design.m, design.n - design.k + 1 - claimed_d
        )
    except ArtifactError:
        raise
    except (KeyError, TypeError, ValueError, GdcError) as e:
        raise ArtifactError(f"malformed artifact {path}: {e}") from e
    code = GdcCode(design=design, field=field, generator=gen, d=claimed_d)
    if verify:
        witness = verify_gdc(gen, design)
        if witness is not None:
            raise ArtifactError(
                f"artifact fails group decodability at bucket {witness[0]}, "
                f"columns {tuple(j + 1 for j in witness[1])}"
            )
        if not verify_distance_exact(gen, claimed_d):
            raise ArtifactError(f"artifact distance is not {claimed_d}")
    return CodeArtifact(version=version, code=code, seed=seed)
