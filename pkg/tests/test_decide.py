import itertools

import pytest

from wordmix import (
    Alphabet,
    Caps,
    DimensionCapError,
    FinitenessCertificate,
    ParamList,
    build,
    canonical_certificate,
    check_trace,
    decide_equivalence,
    decide_finiteness,
    is_member,
    is_trace,
    realize_walk,
    witness_family,
    word_from_str,
    word_to_str,
)

from conftest import plist


D2 = build(Alphabet.from_string("ab"), 2)
T1 = is_trace(D2, [(2, 1), (2, 1, 2)])


def test_infinite_with_certificate():
    p = plist("ab", "ab", "ba", "a")
    v = decide_finiteness(p)
    assert v.verdict == "infinite"
    cert = v.certificate
    assert cert is not None
    # re-check the certificate against the defining systems by hand
    from wordmix import build_balance_system, build_pumping_system
    assert build_balance_system(cert.trace, p).satisfied_by(cert.x)
    rows = build_pumping_system(cert.trace, p)
    assert any(cert.y)
    assert all(sum(a * yi for a, yi in zip(row, cert.y)) == 0 for row in rows)
    # the decision stops at the first certified trace
    assert v.traces_checked >= 1


def test_finite_verdicts():
    fixtures = (
        plist("ab", "ab", "ba", "a", "b"),
        plist("01", "0", "1", "00", "11"),
        plist("a", "a", "aa"),
    )
    for p in fixtures:
        v = decide_finiteness(p)
        assert v.verdict == "finite", p.words
        assert v.certificate is None
        assert v.cap is None


def test_single_word_is_infinite():
    # k = 1: every count trivially equals itself
    v = decide_finiteness(plist("ab", "ab"))
    assert v.verdict == "infinite"


def test_same_letter_counts():
    v = decide_finiteness(plist("ab", "a", "b"))
    assert v.verdict == "infinite"
    w = witness_family(v.certificate, plist("ab", "a", "b"), 1)
    assert is_member(w, plist("ab", "a", "b"))


def test_witness_family_growth():
    p = plist("ab", "ab", "ba", "a")
    cert = FinitenessCertificate(T1, (1,), (1,))
    words = [witness_family(cert, p, n) for n in range(8)]
    # n = 0 and n = 1 coincide; afterwards each step pumps once more
    assert word_to_str(words[1]) == "babab"
    assert words[0] == words[1]
    lengths = [len(w) for w in words[1:]]
    assert lengths == sorted(lengths) and len(set(lengths)) == len(lengths)
    for w in words:
        assert is_member(w, p)
    with pytest.raises(ValueError):
        witness_family(cert, p, -1)


def test_realize_walk():
    w = realize_walk(D2, T1, (2,))
    assert w == (2, 1, 2, 1, 2, 1)
    with pytest.raises(ValueError):
        realize_walk(D2, T1, ())
    with pytest.raises(ValueError):
        realize_walk(D2, T1, (0,))


def test_check_trace_zero_cycles():
    p = plist("ab", "ab", "ba")
    t = is_trace(D2, [(2, 1)])
    # nothing to pump, so no certificate regardless of balance
    assert check_trace(t, p) is None


def test_check_trace_t1():
    p = plist("ab", "ab", "ba", "a")
    cert = check_trace(T1, p)
    assert cert is not None
    assert cert.trace is T1
    assert cert.x == (1,) and cert.y == (1,)


def test_unknown_on_trace_cap():
    p = plist("ab", "ab", "ba", "a", "b")
    v = decide_finiteness(p, Caps(max_traces=3))
    assert v.verdict == "unknown"
    assert v.cap is not None
    assert v.certificate is None


def test_dimension_cap_propagates():
    with pytest.raises(DimensionCapError):
        decide_finiteness(plist("ab", "a" * 30))
    # the cap is the knob: 2^3 = 8 vertices clears 8 but not 4
    with pytest.raises(DimensionCapError):
        decide_finiteness(plist("ab", "aaa"), Caps(max_vertices=4))
    v = decide_finiteness(plist("ab", "aaa"), Caps(max_vertices=8))
    assert v.verdict == "infinite"


def test_unary_exhaustive():
    """Unary k = 2: finite exactly when the word lengths differ."""
    for i in range(1, 4):
        for j in range(1, 4):
            p = plist("a", "a" * i, "a" * j)
            v = decide_finiteness(p)
            expected = "infinite" if i == j else "finite"
            assert v.verdict == expected, (i, j)


def test_equivalence_not_equal():
    p1 = plist("ab", "ab", "ba", "a")
    p2 = plist("ab", "ab", "ba", "a", "b")
    v = decide_equivalence(p1, p2)
    assert v.verdict == "not_equal"
    assert v.witness is not None
    assert (v.member_of == 1) == is_member(v.witness, p1)
    assert (v.member_of == 2) == is_member(v.witness, p2)
    assert is_member(v.witness, p1) != is_member(v.witness, p2)


def test_equivalence_equal():
    assert decide_equivalence(plist("ab", "a", "b"),
                              plist("ab", "b", "a")).verdict == "equal"
    assert decide_equivalence(plist("ab", "aa", "bb"),
                              plist("ab", "bb", "aa")).verdict == "equal"


def test_equivalence_witness_beyond_short_scan():
    """A pair that agrees on all words shorter than the graph dimension, so
    the separating word must come out of a trace branch."""
    p1 = plist("ab", "aa", "bb")
    p2 = plist("ab", "aa", "bb", "ab")
    v = decide_equivalence(p1, p2)
    assert v.verdict == "not_equal"
    assert v.traces_checked > 0
    assert is_member(v.witness, p1) != is_member(v.witness, p2)


def test_equivalence_alphabet_mismatch():
    with pytest.raises(ValueError):
        decide_equivalence(plist("ab", "a"), plist("abc", "a"))


def test_equivalence_unknown_on_cap():
    p1 = plist("ab", "aa", "bb")
    p2 = plist("ab", "aa", "bb", "ba")
    v = decide_equivalence(p1, p2, Caps(max_traces=1))
    assert v.verdict in ("unknown", "not_equal")
    if v.verdict == "unknown":
        assert v.cap is not None


def test_equivalence_brute_force_cross_check():
    """Verdicts agree with raw membership comparison up to length 8."""
    pairs = [
        (plist("ab", "a", "b"), plist("ab", "b", "a"), True),
        (plist("ab", "ab", "ba", "a"), plist("ab", "ab", "ba", "a", "b"), False),
        (plist("ab", "aa", "bb"), plist("ab", "aa", "bb", "ab"), False),
    ]
    for p1, p2, expect_equal in pairs:
        v = decide_equivalence(p1, p2)
        assert (v.verdict == "equal") == expect_equal
        agree = True
        for n in range(9):
            for tup in itertools.product("ab", repeat=n):
                w = tuple(tup)
                if is_member(w, p1) != is_member(w, p2):
                    agree = False
                    break
            if not agree:
                break
        if expect_equal:
            assert agree
        else:
            assert not agree or len(v.witness) > 8


def test_canonical_certificate():
    picked = canonical_certificate([(3, "c"), (1, "a"), (2, "b")])
    assert picked == "a"
    assert canonical_certificate(iter([(5, "z")])) == "z"
    with pytest.raises(ValueError):
        canonical_certificate([])


def test_finiteness_json_shape():
    p = plist("ab", "ab", "ba", "a")
    v = decide_finiteness(p)
    d = v.to_json_dict(p, 12.5)
    assert d["verdict"] == "infinite"
    assert set(d) == {"verdict", "certificate", "stats"}
    assert set(d["certificate"]) == {"trace", "x", "y"}
    assert d["stats"]["traces_checked"] == v.traces_checked
    assert d["stats"]["elapsed_ms"] == 12.5

    pf = plist("ab", "ab", "ba", "a", "b")
    df = decide_finiteness(pf).to_json_dict(pf, 1.0)
    assert df["verdict"] == "finite" and df["certificate"] is None


def test_equivalence_json_shape():
    v = decide_equivalence(plist("ab", "ab", "ba", "a"),
                           plist("ab", "ab", "ba", "a", "b"))
    d = v.to_json_dict(3.0)
    assert d["verdict"] == "not_equal"
    assert set(d["certificate"]) == {"witness_word", "member_of"}
    assert isinstance(d["certificate"]["witness_word"], str)
