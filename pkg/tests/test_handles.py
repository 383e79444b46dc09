import random

import pytest
from hypothesis import given, strategies as st

from hdknots.errors import ValidationError
from hdknots.forms import direct_sum, e8, form_invariants, hyperbolic, kummer_form, signature, SymForm
from hdknots.handles import (
    DiskSystem,
    FramedLink,
    Move,
    adjust_to_targets,
    apply_moves,
    framed_link_from_form,
    framing_of,
    intersection_form,
    kirby_disk_system,
    kirby_disk_targets,
    verify_kummer,
)

signs = st.lists(st.sampled_from([1, -1]), max_size=8)


@pytest.mark.parametrize("disk, framing", [((), 0), ((-1,), -2), ((1, 1, -1), 2)])
def test_framing_of(disk, framing):
    assert framing_of(disk) == framing


@given(signs, signs)
def test_framing_linear(d1, d2):
    assert framing_of(d1 + d2) == framing_of(d1) + framing_of(d2)


class TestAdjust:
    def test_kirby_system(self):
        moves = adjust_to_targets(kirby_disk_system())
        assert moves == [Move(i, -1) for i in range(1, 22)]
        # one-based disk numbers 2..22 as in the construction
        assert [m.disk + 1 for m in moves] == list(range(2, 23))

    def test_already_at_targets(self):
        ds = DiskSystem([(1, -1), (-1,)], [0, -1])
        assert adjust_to_targets(ds) == []

    def test_overshoot(self):
        ds = DiskSystem([(1, 1)], [0])
        assert adjust_to_targets(ds) == [Move(0, -1), Move(0, -1)]

    def test_positive_deficit(self):
        ds = DiskSystem([(-1,), ()], [1, 0])
        assert adjust_to_targets(ds) == [Move(0, 1), Move(0, 1)]

    def test_random_minimal_and_reaching(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(0, 6)
            disks = [[rng.choice((1, -1)) for _ in range(rng.randint(0, 5))] for _ in range(n)]
            targets = [rng.randint(-4, 4) for _ in range(n)]
            ds = DiskSystem(disks, targets)
            moves = adjust_to_targets(ds)
            # each move changes exactly one sum by one, so sum |difference| is a lower bound
            assert len(moves) == sum(abs(t - s) for t, s in zip(targets, ds.sums()))
            assert apply_moves(ds, moves).at_targets()
            assert [m.disk for m in moves] == sorted(m.disk for m in moves)
            for i in range(n):
                assert len({m.epsilon for m in moves if m.disk == i}) <= 1

    def test_lengths_validated(self):
        with pytest.raises(ValidationError):
            DiskSystem([()], [0, 1])
        with pytest.raises(ValidationError):
            DiskSystem([(2,)], [0])
        with pytest.raises(ValidationError):
            apply_moves(DiskSystem([()], [0]), [Move(3, 1)])


class TestKirbyTargets:
    def test_shape(self):
        t = kirby_disk_targets()
        assert len(t) == 22
        assert t == (0,) + (-1,) * 21

    def test_framings_after_adjustment(self):
        ds = kirby_disk_system()
        done = apply_moves(ds, adjust_to_targets(ds))
        assert done.framings() == [0] + [-2] * 21
        assert framing_of(done.disks[0]) == 0
        assert framing_of(done.disks[5]) == -2


class TestIntersectionForm:
    def test_unlink(self):
        f = intersection_form(FramedLink([[0, 0], [0, 0]], [0, 0]))
        assert f == SymForm([[0, 0], [0, 0]])
        assert signature(f) == 0

    def test_hopf(self):
        assert intersection_form(FramedLink([[0, 1], [1, 0]], [0, 0])) == hyperbolic()

    def test_kummer_link(self):
        fl = framed_link_from_form(kummer_form())
        f = intersection_form(fl)
        assert f == kummer_form()
        assert list(fl.framings) == [0] * 6 + [-2] * 16
        assert verify_kummer(f).ok
        assert str(form_invariants(f)) == "rank=22 sig=-16 det=-1 even=yes"

    def test_validation(self):
        with pytest.raises(ValidationError):
            FramedLink([[1]], [0])
        with pytest.raises(ValidationError):
            FramedLink([[0, 1], [2, 0]], [0, 0])
        with pytest.raises(ValidationError):
            FramedLink([[0]], [0, 1])

    @given(st.integers(0, 5).flatmap(lambda n: st.tuples(
        st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n),
        st.lists(st.integers(-4, 4), min_size=n, max_size=n),
    )))
    def test_symmetric_with_framing_diagonal(self, data):
        flat, framings = data
        n = len(framings)
        link = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                link[i][j] = link[j][i] = flat[i * n + j]
        f = intersection_form(FramedLink(link, framings))
        assert all(f[i, j] == f[j, i] for i in range(n) for j in range(n))
        assert [f[i, i] for i in range(n)] == framings


class TestVerifyKummer:
    def test_kummer(self):
        report = verify_kummer(kummer_form())
        assert report.ok
        assert str(report) == "rank=22 sig=-16 det=-1 even=yes"

    def test_odd_entry(self):
        rows = [list(r) for r in kummer_form().entries]
        rows[10][10] = -3
        report = verify_kummer(SymForm(rows))
        assert not report.ok
        assert dict(report.checks)["even"] is False

    def test_positive_e8(self):
        h, e = hyperbolic(), e8("positive")
        report = verify_kummer(direct_sum(h, h, h, e, e))
        assert not report.ok
        assert report.invariants.signature == 16
        assert dict(report.checks) == {"rank=22": True, "sig=-16": False, "det=-1": True, "even": True}
