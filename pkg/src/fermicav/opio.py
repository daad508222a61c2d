"""Typed inputs and outputs of the fermicav commands."""
import copy
import json
from collections.abc import MutableMapping
from typing import Any, Dict, Iterator, List

import jsonpickle


def type_name(tp: Any) -> str:
    """Readable name of a class or typing construct"""
    if isinstance(tp, type):
        if tp.__module__ == "builtins":
            return tp.__name__
        return "%s.%s" % (tp.__module__, tp.__qualname__)
    return str(tp).replace("typing.", "")


def dumps(value: Any) -> str:
    """JSON text of a value, falling back to jsonpickle for objects JSON
    cannot represent"""
    try:
        return json.dumps(value, sort_keys=True)
    except (TypeError, ValueError):
        return jsonpickle.dumps(value)


class Parameter:
    """
    Signature of one command input or output, or of one scenario field

    Args:
        type: accepted type, checked with typeguard
        unit: physical unit of the value, None for dimensionless
        help: one-line description
        default: value taken when the key is absent; without it the key is
            required
    """

    def __init__(
            self,
            type: Any,
            unit: str = None,
            help: str = None,
            **kwargs,
    ) -> None:
        self.type = type
        self.unit = unit
        self.help = help
        for k, v in kwargs.items():
            self.__setattr__(k, v)

    @property
    def required(self) -> bool:
        return not hasattr(self, "default")

    def describe(self) -> Dict[str, Any]:
        d = {"type": type_name(self.type)}
        if self.unit is not None:
            d["unit"] = self.unit
        if self.help is not None:
            d["help"] = self.help
        if not self.required:
            d["default"] = json.loads(dumps(self.default))
        return d

    def __repr__(self):
        return "Parameter(%s)" % ", ".join(
            "%s=%s" % kv for kv in self.describe().items())


class _Record(MutableMapping):
    def __init__(self, *args, **kwargs):
        self._data = dict(*args, **kwargs)

    def __getitem__(self, key: str) -> Any:
        return self._data[key]

    def __setitem__(self, key: str, value: Any) -> None:
        self._data[key] = value

    def __delitem__(self, key: str) -> None:
        del self._data[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self._data)


class OPIOSign(_Record):
    """Keys of an OPIO with their Parameter (or bare type)"""

    def parameter(self, key: str) -> Parameter:
        sign = self[key]
        return sign if isinstance(sign, Parameter) else Parameter(sign)

    def required(self) -> List[str]:
        return [k for k in self if self.parameter(k).required]

    def defaults(self) -> Dict[str, Any]:
        """Fresh copies of the declared defaults"""
        return {k: copy.deepcopy(self.parameter(k).default) for k in self
                if not self.parameter(k).required}

    def describe(self) -> Dict[str, Dict[str, Any]]:
        return {k: self.parameter(k).describe() for k in self}


class OPIO(_Record):
    """Inputs or outputs of a command, keyed by name"""
