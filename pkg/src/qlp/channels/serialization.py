"""JSON documents for channels: {in_dim, kraus: [[re, im] ...], out_blocks: [[dim, weight] ...]}.

Floats are written with ``repr`` precision by the json module, so float64
values round-trip bit for bit.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from qlp.channels.channel import OutputBlock, QuantumChannel
from qlp.core.enums import ChannelFamily
from qlp.core.errors import ChannelError


def channel_to_dict(ch: QuantumChannel) -> dict[str, Any]:
    return {
        "name": ch.name,
        "in_dim": ch.in_dim,
        "kraus": [
            [[[float(z.real), float(z.imag)] for z in row] for row in op]
            for op in ch.kraus
        ],
        "out_blocks": [[block.dim, block.weight] for block in ch.out_blocks],
        "family": ch.family.value if ch.family else None,
        "copies": ch.copies,
        "parameter": ch.parameter,
    }


def channel_from_dict(data: dict[str, Any]) -> QuantumChannel:
    try:
        raw = np.asarray(data["kraus"], dtype=np.float64)
        if raw.ndim != 4 or raw.shape[-1] != 2:
            raise ValueError(f"kraus must be a list of matrices of [re, im] pairs, got {raw.shape}")
        kraus = np.empty(raw.shape[:-1], dtype=np.complex128)
        kraus.real = raw[..., 0]
        kraus.imag = raw[..., 1]
        blocks = tuple(OutputBlock(int(dim), float(weight)) for dim, weight in data["out_blocks"])
        family = data.get("family")
        return QuantumChannel(
            name=str(data.get("name", "channel")),
            in_dim=int(data["in_dim"]),
            kraus=kraus,
            out_blocks=blocks,
            family=ChannelFamily(family) if family else None,
            copies=int(data.get("copies", 1)),
            parameter=_optional_float(data.get("parameter")),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise ChannelError(f"Malformed channel document: {e}") from e


def _optional_float(value: Any) -> float | None:
    return None if value is None else float(value)


def dumps(ch: QuantumChannel) -> str:
    return json.dumps(channel_to_dict(ch))


def loads(text: str) -> QuantumChannel:
    return channel_from_dict(json.loads(text))
