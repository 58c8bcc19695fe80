import json
import unittest
from fractions import Fraction

from sympy.testing import pytest

from gjx.arrangement.arranger import arrange
from gjx.cli.documents import arrangement_document, dump_json, parse_matrix, render_matrix, render_table, \
    trace_document
from gjx.closedform.verification import verify_trace
from gjx.engine.gauss_jordan import eliminate
from gjx.exceptions import BadTokenError, EmptyInputError, RaggedRowsError, ZeroDenominatorError
from gjx.numeric.matrix import Matrix


class TestParseMatrix(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_matrix("2 1\n4 3\n"), Matrix([[2, 1], [4, 3]]))
        self.assertEqual(parse_matrix("1/2 -3\n0.25 7\n"), Matrix([["1/2", -3], ["1/4", 7]]))
        text = "# a comment\n\n  1\t2   # trailing\n\n3 4\n   \n"
        self.assertEqual(parse_matrix(text), Matrix([[1, 2], [3, 4]]))
        self.assertEqual(parse_matrix("6/4")[1, 1], Fraction(3, 2))

    def test_errors(self):
        with self.assertRaises(RaggedRowsError) as cm:
            parse_matrix("1 2\n3\n")
        self.assertEqual((cm.exception.line, cm.exception.expected, cm.exception.found), (2, 2, 1))
        with self.assertRaises(BadTokenError) as cm:
            parse_matrix("1 2\n3 x4\n")
        self.assertEqual((cm.exception.line, cm.exception.column, cm.exception.token), (2, 3, "x4"))
        with pytest.raises(BadTokenError):
            parse_matrix("1.5e3\n")
        with self.assertRaises(ZeroDenominatorError) as cm:
            parse_matrix("1 1/0\n")
        self.assertEqual((cm.exception.line, cm.exception.column), (1, 3))
        with pytest.raises(EmptyInputError):
            parse_matrix("# nothing\n\n")
        with pytest.raises(EmptyInputError):
            parse_matrix("")

    def test_render_round_trip(self):
        a = Matrix([["-1/3", 0, 7], [2, "5/2", -4]])
        self.assertEqual(render_matrix(a), "-1/3 0 7\n2 5/2 -4\n")
        self.assertEqual(parse_matrix(render_matrix(a)), a)

    def test_render_table(self):
        self.assertEqual(render_table(Matrix([[1, "-1/2"], [0, 1]])), ["  1  -1/2", "  0     1"])


class TestJsonDocuments(unittest.TestCase):

    def setUp(self):
        self.a = Matrix([[2, 1], [4, 3]])

    def test_trace_document(self):
        document = trace_document(eliminate(self.a))
        self.assertEqual(list(document), ["m", "n", "rank", "steps"])
        self.assertEqual(document["rank"], 2)
        self.assertEqual(len(document["steps"]), 4)
        self.assertEqual(document["steps"][0], {"q": 1, "kind": "odd", "G": [["1/2", "0"], ["0", "1"]],
                                                "A": [["1", "1/2"], ["4", "3"]]})
        self.assertEqual(document["steps"][-1]["A"], [["1", "0"], ["0", "1"]])

    def test_verification_projection(self):
        report = verify_trace(self.a)
        document = trace_document(report.trace, report)
        self.assertEqual(document["verification"], {"allMatch": True, "intermediateEntries": 8,
                                                    "operationEntries": 16, "pivots": 2, "products": 2,
                                                    "mismatches": []})

    def test_dump_json_is_stable(self):
        first = dump_json(trace_document(eliminate(self.a)))
        second = dump_json(trace_document(eliminate(Matrix([[2, 1], [4, 3]]))))
        self.assertEqual(first, second)
        self.assertTrue(first.endswith("}\n"))
        self.assertEqual(json.loads(first)["m"], 2)

    def test_arrangement_document(self):
        document = arrangement_document(arrange(Matrix([[1, 2], [3, 4]])))
        self.assertEqual(document, {"rowPerm": [2, 1], "colPerm": [2, 1],
                                    "swaps": [{"k": 0, "kind": "row", "from": 1, "to": 2},
                                              {"k": 0, "kind": "col", "from": 1, "to": 2}],
                                    "arranged": [["4", "3"], ["2", "1"]]})


if __name__ == '__main__':
    unittest.main()
