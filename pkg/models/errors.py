# models/errors.py
"""Exception hierarchy shared by the library and the command-line front end."""


class PolyconjError(Exception):
    """Base error for everything raised by polyconj."""
    pass

class WordSyntaxError(PolyconjError):
    """Text could not be read as a word (bad token, out-of-rank index)."""
    pass

class RankMismatchError(PolyconjError):
    """Operands live in polycyclic monoids of different rank."""
    pass

class AlphabetError(PolyconjError):
    """Alphabet clash (zero already present, symbol collision)."""
    pass

class PreconditionError(PolyconjError):
    """An operation was called outside its precondition."""
    pass

class NotLengthReducingError(PreconditionError):
    """Normalization requested on a system that does not shorten words."""
    pass

class IncompleteSystemError(PreconditionError):
    """A complete (noetherian and confluent) system was required."""
    pass

class UnknownPresetError(PolyconjError):
    """Preset name not in the registry."""
    pass

class RelationNotDefinedError(PolyconjError):
    """The selected conjugacy relation has no decider for this preset."""
    pass

class ConfigError(PolyconjError):
    """Configuration file missing or malformed."""
    pass
