import itertools

import pytest

from wordstats import (
    BlockPartition,
    InputError,
    PairKind,
    StatVector,
    Word,
    classify_pair,
    complement,
    stat_vector,
)


class TestClassifyPair:
    def test_descent(self):
        assert classify_pair(2, 1, k=2) is PairKind.DESCENT

    def test_level(self):
        assert classify_pair(3, 3, k=3) is PairKind.LEVEL

    def test_rise(self):
        assert classify_pair(1, 4, k=4) is PairKind.RISE

    def test_out_of_range_letter(self):
        with pytest.raises(InputError):
            classify_pair(0, 1, k=3)
        with pytest.raises(InputError):
            classify_pair(1, 5, k=4)

    def test_total_and_exclusive(self):
        # every pair lands in exactly one class
        for a, b in itertools.product(range(1, 5), repeat=2):
            kind = classify_pair(a, b, k=4)
            assert kind in (PairKind.DESCENT, PairKind.LEVEL, PairKind.RISE)
            assert (kind is PairKind.DESCENT) == (a > b)
            assert (kind is PairKind.LEVEL) == (a == b)
            assert (kind is PairKind.RISE) == (a < b)


class TestWord:
    def test_empty_word_is_valid(self):
        assert len(Word((), 3)) == 0

    def test_letter_validation(self):
        with pytest.raises(InputError):
            Word((1, 3), 2)
        with pytest.raises(InputError):
            Word((0,), 2)
        with pytest.raises(InputError):
            Word((), 0)

    def test_complement_examples(self):
        assert complement(Word((1, 3, 2), 3)).letters == (3, 1, 2)
        assert complement(Word((), 5)).letters == ()

    def test_complement_is_involution(self):
        word = Word((2, 4, 1, 4, 1), 4)
        assert complement(complement(word)) == word
        for letters in itertools.product(range(1, 4), repeat=4):
            word = Word(letters, 3)
            assert word.complement().complement() == word


class TestBlockPartition:
    def test_threshold(self):
        part = BlockPartition.threshold(4, 2)
        assert part.blocks == (1, 1, 2, 2)
        assert part.t == 2
        assert part.block_sizes() == (2, 2)
        assert part.letters_in(1) == (1, 2)

    def test_threshold_edges_allow_empty_blocks(self):
        assert BlockPartition.threshold(3, 0).block_sizes() == (0, 3)
        assert BlockPartition.threshold(3, 3).block_sizes() == (3, 0)
        with pytest.raises(InputError):
            BlockPartition.threshold(3, 4)

    def test_mod_residue(self):
        part = BlockPartition.mod_residue(7, 3)
        assert part.blocks == (1, 2, 3, 1, 2, 3, 1)
        # multiples of the modulus sit in the last block
        assert part.letters_in(3) == (3, 6)

    def test_mod_residue_small_alphabet(self):
        part = BlockPartition.mod_residue(2, 3)
        assert part.t == 3
        assert part.block_sizes() == (1, 1, 0)

    def test_from_blocks(self):
        part = BlockPartition.from_blocks((2, 1, 2))
        assert part.k == 3 and part.t == 2
        with pytest.raises(InputError):
            BlockPartition.from_blocks((1, 3), t=2)
        with pytest.raises(InputError):
            BlockPartition.from_blocks(())

    def test_block_of_validates(self):
        part = BlockPartition.threshold(3, 1)
        assert part.block_of(1) == 1 and part.block_of(3) == 2
        with pytest.raises(InputError):
            part.block_of(4)


class TestStatVector:
    def test_hand_evaluated_word(self):
        # 2121: pairs (2,1) descent, (1,2) rise, (2,1) descent; the rise
        # starts at the 1, the descents at the 2s
        vec = stat_vector(Word((2, 1, 2, 1), 2), BlockPartition.threshold(2, 1))
        assert vec.blocks == ((0, 1, 0, 2), (2, 0, 0, 2))

    def test_empty_word(self):
        part = BlockPartition.mod_residue(4, 2)
        assert stat_vector(Word((), 4), part) == StatVector.zero(2)

    def test_constant_word_only_levels(self):
        vec = stat_vector(Word((1, 1, 1), 3), BlockPartition.mod_residue(3, 2))
        assert vec.blocks == ((0, 0, 2, 3), (0, 0, 0, 0))

    def test_alphabet_mismatch(self):
        with pytest.raises(InputError):
            stat_vector(Word((1,), 2), BlockPartition.threshold(3, 1))

    def test_accessors(self):
        vec = StatVector(((1, 2, 3, 4), (5, 6, 7, 8)))
        assert (vec.des(1), vec.ris(1), vec.lev(1), vec.cnt(1)) == (1, 2, 3, 4)
        assert (vec.des(2), vec.ris(2), vec.lev(2), vec.cnt(2)) == (5, 6, 7, 8)
        assert vec.length == 12
        assert vec.pair_total == 24

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_pair_and_count_invariants(self, k):
        partitions = [BlockPartition.threshold(k, t) for t in range(k + 1)]
        partitions.append(BlockPartition.mod_residue(k, 2))
        for n in range(5):
            for letters in itertools.product(range(1, k + 1), repeat=n):
                word = Word(letters, k)
                for part in partitions:
                    vec = stat_vector(word, part)
                    assert vec.length == n
                    assert vec.pair_total == max(n - 1, 0)


def _des_in(letters, members):
    return sum(
        1
        for i in range(len(letters) - 1)
        if letters[i] > letters[i + 1] and letters[i] in members
    )


def _ris_in(letters, members):
    return sum(
        1
        for i in range(len(letters) - 1)
        if letters[i] < letters[i + 1] and letters[i] in members
    )


class TestComplementDuality:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_threshold_duality(self, k):
        # descents starting <= t become rises starting in the top t letters
        for n in range(5):
            for letters in itertools.product(range(1, k + 1), repeat=n):
                mirror = tuple(k + 1 - x for x in letters)
                for t in range(k + 1):
                    bottom = set(range(1, t + 1))
                    top = set(range(k + 1 - t, k + 1))
                    assert _des_in(letters, bottom) == _ris_in(mirror, top)

    @pytest.mark.parametrize("s,k", [(2, 2), (2, 4), (3, 3)])
    def test_residue_duality_full_alphabet(self, s, k):
        # alphabet a multiple of s: class r maps to class s+1-r
        part = BlockPartition.mod_residue(k, s)
        for n in range(5):
            for letters in itertools.product(range(1, k + 1), repeat=n):
                mirror = tuple(k + 1 - x for x in letters)
                for r in range(1, s + 1):
                    members = set(part.letters_in(r))
                    image_block = (k - r) % s + 1
                    assert image_block == s + 1 - r  # s divides k here
                    image = set(part.letters_in(image_block))
                    assert _des_in(letters, members) == _ris_in(mirror, image)
