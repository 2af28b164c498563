"""Exception types raised across the engine."""


class ArabverbError(Exception):
    """Base class for all engine errors."""


class UnknownCharacter(ArabverbError):
    def __init__(self, char, position):
        self.char = char
        self.position = position
        super().__init__("unknown character %r at position %d" % (char, position))


class MalformedInternal(ArabverbError):
    pass


class BadCode(ArabverbError):
    pass


class UnknownClass(ArabverbError):
    pass


class BadLexicon(ArabverbError):
    pass


class NoEntries(BadLexicon):
    pass


class OpOutOfRange(ArabverbError):
    pass


class StringTooLong(ArabverbError):
    def __init__(self, length, slots):
        self.length = length
        self.slots = slots
        super().__init__("merged string of %d exceeds %d template slots" % (length, slots))


class IllegalCell(ArabverbError):
    pass


class StageOrderError(ArabverbError):
    pass


class BadRuleFile(ArabverbError):
    pass


class LemmaNotFound(ArabverbError):
    pass


class EntryFailed(ArabverbError):
    def __init__(self, entry, stage, cause):
        self.entry = entry
        self.stage = stage
        self.cause = cause
        super().__init__("entry %s failed at %s: %s" % (entry, stage, cause))
