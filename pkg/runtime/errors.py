"""
Error Types
Exception hierarchy shared by the library and mapped to CLI exit codes
"""


class TorskurError(Exception):
    """Base class; exit_code is what the CLI returns"""
    exit_code: int = 1


class InputError(TorskurError):
    """Malformed JSON, arguments or parameters"""
    exit_code = 2


class ConfigurationError(TorskurError):
    """Invalid environment configuration"""
    exit_code = 2


class RingMismatchError(TorskurError):
    """Operands live in different rings or the flavor does not support the operation"""
    exit_code = 3


class SlotMismatchError(TorskurError):
    """A word is applied to an element of the wrong slot or colour sequence"""
    exit_code = 3


class InvarianceError(TorskurError):
    """An input is not invariant under the required parabolic subgroup"""
    exit_code = 3


class ExactnessError(TorskurError):
    """
    An exact division left a remainder or an output lost its invariance
    Always an implementation or convention bug
    """
    exit_code = 1
