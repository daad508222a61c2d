import abc
import functools
import inspect
import logging
from abc import ABC
from typing import Any, Dict

from typeguard import check_type

from .opio import OPIO, OPIOSign

logger = logging.getLogger(__name__)


class OP(ABC):
    """
    Command with typed inputs and outputs

    Subclasses declare get_input_sign and get_output_sign and wrap execute
    with OP.exec_sign_check.

    Args:
        progress_total: an int representing total progress
        progress_current: an int representing current progress
    """
    progress_total = 1
    progress_current = 0

    def __init__(
            self,
            *args,
            **kwargs,
    ) -> None:
        pass

    def __setattr__(self, key, value):
        super().__setattr__(key, value)
        if key == "progress_current":
            logger.debug("%s progress %s/%s" % (
                type(self).__name__, self.progress_current,
                self.progress_total))

    @classmethod
    @abc.abstractmethod
    def get_input_sign(cls) -> OPIOSign:
        """Get the signature of the inputs
        """

    @classmethod
    @abc.abstractmethod
    def get_output_sign(cls) -> OPIOSign:
        """Get the signature of the outputs
        """

    @abc.abstractmethod
    def execute(
            self,
            op_in: OPIO,
    ) -> OPIO:
        """Run the command
        """
        raise NotImplementedError

    @staticmethod
    def exec_sign_check(func):
        @functools.wraps(func)
        def wrapper_exec(self, op_in):
            name = type(self).__name__
            check_signature(op_in, self.get_input_sign(), "input of " + name)
            op_out = func(self, op_in)
            check_signature(op_out, self.get_output_sign(),
                            "output of " + name)
            return op_out

        return wrapper_exec

    @classmethod
    def get_info(cls) -> Dict[str, Any]:
        return {
            "name": "%s.%s" % (cls.__module__, cls.__name__),
            "doc": inspect.getdoc(cls),
            "inputs": cls.get_input_sign().describe(),
            "outputs": cls.get_output_sign().describe(),
        }


def check_signature(
        opio: OPIO,
        sign: OPIOSign,
        what: str,
) -> None:
    """
    Fill in declared defaults, then reject missing or undeclared keys and
    values of the wrong type

    Args:
        opio: inputs or outputs, completed in place
        sign: their signature
        what: description used in error messages
    """
    for key, value in sign.defaults().items():
        if key not in opio:
            opio[key] = value
    missing = [k for k in sign if k not in opio]
    if missing:
        raise RuntimeError("%s lacks the declared keys %s" % (
            what, ", ".join(missing)))
    undeclared = [k for k in opio if k not in sign]
    if undeclared:
        raise RuntimeError("%s has keys missing from its signature: %s" % (
            what, ", ".join(undeclared)))
    for key, value in opio.items():
        # None stands for an unset optional value
        if value is not None:
            check_type("%s[%s]" % (what, key), value,
                       sign.parameter(key).type)
