import random

import pytest

from arqid.classifiers import ClassifierKind
from arqid.dataset import LabeledExample, load_dataset, save_dataset_jsonl
from arqid.errors import BadParams, EmptyDataset, LengthMismatch
from arqid.evaluation import (
    compute_metrics,
    generate_synthetic,
    run_ablation,
    split_dataset,
)
from arqid.features import FeatureMode, extract_features
from arqid.lexicon import SentimentLexicon


def make_dataset(n0, n1):
    return [LabeledExample(id=f"n{i}", text="نص", label=0) for i in range(n0)] \
        + [LabeledExample(id=f"p{i}", text="نص", label=1) for i in range(n1)]


class TestSplit:
    def test_balanced_ten(self):
        split = split_dataset(make_dataset(5, 5), seed=3)
        assert len(split.train_ids) == 8
        assert len(split.test_ids) == 2
        train_pos = sum(1 for i in split.train_ids if i.startswith("p"))
        assert train_pos == 4
        assert sum(1 for i in split.test_ids if i.startswith("p")) == 1

    def test_seven_three(self):
        split = split_dataset(make_dataset(7, 3), seed=3)
        train0 = sum(1 for i in split.train_ids if i.startswith("n"))
        train1 = sum(1 for i in split.train_ids if i.startswith("p"))
        assert (train0, train1) == (5, 2)
        assert len(split.test_ids) == 3

    def test_same_seed_identical(self):
        ds = make_dataset(13, 9)
        assert split_dataset(ds, 42) == split_dataset(ds, 42)

    def test_different_seed_differs(self):
        ds = make_dataset(30, 30)
        assert split_dataset(ds, 1) != split_dataset(ds, 2)

    def test_partition_property_random(self):
        rng = random.Random(6)
        for _ in range(100):
            ds = make_dataset(rng.randint(1, 40), rng.randint(0, 40))
            split = split_dataset(ds, rng.randrange(10_000))
            train, test = set(split.train_ids), set(split.test_ids)
            assert train | test == {ex.id for ex in ds}
            assert train & test == set()
            by_label = {0: [e for e in ds if e.label == 0],
                        1: [e for e in ds if e.label == 1]}
            for label, members in by_label.items():
                expect = (4 * len(members)) // 5
                got = sum(1 for e in members if e.id in train)
                assert got == expect

    def test_empty_dataset_raises(self):
        with pytest.raises(EmptyDataset):
            split_dataset([], seed=1)


class TestMetrics:
    def test_all_correct(self):
        report = compute_metrics([1, 0, 1, 0], [1, 0, 1, 0])
        assert report.precision_pos == report.recall_pos == report.f1_pos == 1.0
        assert report.macro_f == 1.0

    def test_hand_counted_cell(self):
        # tp=9, fp=1, fn=3: P=0.9, R=0.75, F=2*0.9*0.75/1.65
        preds = [1] * 9 + [1] + [0] * 3 + [0] * 2
        gold = [1] * 9 + [0] + [1] * 3 + [0] * 2
        report = compute_metrics(preds, gold)
        assert (report.tp, report.fp, report.fn, report.tn) == (9, 1, 3, 2)
        assert report.precision_pos == pytest.approx(0.9)
        assert report.recall_pos == pytest.approx(0.75)
        assert report.f1_pos == pytest.approx(2 * 0.9 * 0.75 / 1.65)

    def test_degenerate_denominators_zero(self):
        report = compute_metrics([0, 0], [1, 1])
        assert report.precision_pos == 0.0
        assert report.recall_pos == 0.0
        assert report.f1_pos == 0.0

    def test_macro_is_unweighted_mean(self):
        report = compute_metrics([1, 1, 0, 0], [1, 0, 1, 0])
        # both classes: P=R=0.5 -> macro 0.5
        assert report.macro_p == pytest.approx(0.5)
        assert report.macro_r == pytest.approx(0.5)
        assert report.macro_f == pytest.approx(0.5)

    def test_counts_sum_to_test_size(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(1, 60)
            preds = [rng.randint(0, 1) for _ in range(n)]
            gold = [rng.randint(0, 1) for _ in range(n)]
            report = compute_metrics(preds, gold)
            assert report.tp + report.fp + report.fn + report.tn == n

    def test_brute_force_agreement_random(self):
        rng = random.Random(23)
        for _ in range(50):
            n = rng.randint(1, 1000)
            preds = [rng.randint(0, 1) for _ in range(n)]
            gold = [rng.randint(0, 1) for _ in range(n)]
            report = compute_metrics(preds, gold)
            tp = sum(p == 1 and g == 1 for p, g in zip(preds, gold))
            fp = sum(p == 1 and g == 0 for p, g in zip(preds, gold))
            fn = sum(p == 0 and g == 1 for p, g in zip(preds, gold))
            assert (report.tp, report.fp, report.fn) == (tp, fp, fn)
            if tp + fp:
                assert report.precision_pos == pytest.approx(tp / (tp + fp))
            if tp + fn:
                assert report.recall_pos == pytest.approx(tp / (tp + fn))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compute_metrics([1], [1, 0])

    def test_empty_raises(self):
        with pytest.raises(EmptyDataset):
            compute_metrics([], [])


class TestSynthetic:
    def test_exact_balance(self, lex):
        ds = generate_synthetic(1000, 7, lex)
        assert len(ds) == 1000
        assert sum(e.label for e in ds) == 500

    def test_deterministic_byte_identical(self, lex, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        save_dataset_jsonl(generate_synthetic(200, 9, lex), a)
        save_dataset_jsonl(generate_synthetic(200, 9, lex), b)
        assert a.read_bytes() == b.read_bytes()

    def test_sentiment_rate_near_planted_probability(self, lex):
        ds = generate_synthetic(1000, 7, lex)

        def has_term(ex):
            vec = extract_features(ex.text, lex, FeatureMode.ALL)
            names = FeatureMode.ALL.schema.names
            return vec[names.index("numOfPos")] + vec[names.index("numOfNeg")] >= 1

        rate1 = sum(has_term(e) for e in ds if e.label == 1) / 500
        rate0 = sum(has_term(e) for e in ds if e.label == 0) / 500
        assert abs(rate1 - 0.8) <= 0.05
        assert abs(rate0 - 0.2) <= 0.05

    def test_question_marks_uninformative(self, lex):
        ds = generate_synthetic(1000, 7, lex)
        q1 = sum("؟" in e.text for e in ds if e.label == 1) / 500
        q0 = sum("؟" in e.text for e in ds if e.label == 0) / 500
        assert abs(q1 - 0.5) <= 0.06
        assert abs(q0 - 0.5) <= 0.06

    def test_too_small_n_rejected(self, lex):
        with pytest.raises(BadParams):
            generate_synthetic(9, 1, lex)

    def test_empty_category_rejected(self):
        with pytest.raises(BadParams):
            generate_synthetic(100, 1, SentimentLexicon(
                pos_terms=frozenset({"ممتاز"})))

    def test_ids_unique_and_roundtrip(self, lex, tmp_path):
        ds = generate_synthetic(50, 3, lex)
        assert len({e.id for e in ds}) == 50
        path = tmp_path / "ds.jsonl"
        save_dataset_jsonl(ds, path)
        assert load_dataset(path) == ds


class TestAblation:
    def test_deterministic(self, lex):
        ds = generate_synthetic(120, 5, lex)
        a = run_ablation(ds, lex, seed=5)
        b = run_ablation(ds, lex, seed=5)
        assert a == b

    def test_empty_lexicon_before_equals_after(self, lex):
        ds = generate_synthetic(200, 11, lex)
        empty = SentimentLexicon()
        table = run_ablation(ds, empty, seed=11)
        for kind, before, after in table.rows():
            assert before.ok and after.ok, kind
            assert (before.report.tp, before.report.fp,
                    before.report.fn, before.report.tn) \
                == (after.report.tp, after.report.fp,
                    after.report.fn, after.report.tn), kind

    def test_per_cell_errors_recorded_not_fatal(self):
        # 9 vs 2 examples: floor(0.8*2)=1 of the positive class reaches
        # train, but 9/1 with floor(0.8*1)=0 leaves train single-class
        ds = [LabeledExample(id=f"n{i}", text="اليوم البيت", label=0)
              for i in range(9)]
        ds.append(LabeledExample(id="p0", text="هل ممتاز ؟", label=1))
        lex9 = SentimentLexicon(pos_terms=frozenset({"ممتاز"}))
        table = run_ablation(ds, lex9, seed=1)
        margin_kinds = {ClassifierKind.LOGISTIC_REGRESSION,
                        ClassifierKind.LINEAR_SVM, ClassifierKind.KERNEL_SVM}
        for kind, before, after in table.rows():
            if kind in margin_kinds:
                assert not before.ok and "SingleClass" in before.error
                assert not after.ok
            else:
                assert before.ok and after.ok

    def test_cells_share_one_split(self, lex):
        ds = generate_synthetic(100, 13, lex)
        table = run_ablation(ds, lex, seed=13)
        sizes = {b.report.tp + b.report.fp + b.report.fn + b.report.tn
                 for _, b, a in table.rows() if b.ok}
        assert len(sizes) == 1


class TestDatasetIO:
    def test_jsonl_roundtrip_with_optional_fields(self, tmp_path):
        ds = [LabeledExample("a", "هل؟", 1, sector="banking", source="twitter"),
              LabeledExample("b", "تمام", 0)]
        path = tmp_path / "d.jsonl"
        save_dataset_jsonl(ds, path)
        assert load_dataset(path) == ds

    def test_csv_accepted(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_text(
            'id,text,label,sector,source\n'
            'a,"هل يوجد عرض، اليوم؟",1,retail,facebook\n'
            'b,تمام,0,,\n',
            encoding="utf-8")
        ds = load_dataset(path)
        assert ds[0].text == "هل يوجد عرض، اليوم؟"
        assert ds[0].label == 1
        assert ds[1].sector is None

    def test_duplicate_ids_rejected(self, tmp_path):
        path = tmp_path / "d.jsonl"
        path.write_text('{"id": "x", "text": "a", "label": 0}\n'
                        '{"id": "x", "text": "b", "label": 1}\n', encoding="utf-8")
        with pytest.raises(ValueError):
            load_dataset(path)

    def test_bad_label_rejected(self, tmp_path):
        path = tmp_path / "d.jsonl"
        path.write_text('{"id": "x", "text": "a", "label": 2}\n', encoding="utf-8")
        with pytest.raises(ValueError):
            load_dataset(path)

    def test_bad_json_line_rejected(self, tmp_path):
        path = tmp_path / "d.jsonl"
        path.write_text('{"id": "x", "text": "a", "label": 0}\nnot json\n',
                        encoding="utf-8")
        with pytest.raises(ValueError):
            load_dataset(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "d.jsonl"
        path.write_text("", encoding="utf-8")
        with pytest.raises(EmptyDataset):
            load_dataset(path)
