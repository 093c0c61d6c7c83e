"""Shared helpers for the test suite."""

from wordmix import Alphabet, ParamList, word_from_str


def plist(alphabet: str, *words: str) -> ParamList:
    """Build a ParamList from plain strings, e.g. plist("ab", "ab", "ba")."""
    return ParamList(Alphabet.from_string(alphabet), tuple(word_from_str(w) for w in words))
