import logging
import sys
from abc import ABC, abstractmethod

import pandas as pd
from terminaltables import DoubleTable

from backend.core.BroadcastError import BroadcastError
import backend.core.Serialization as serialization
from interfaces.cmd.RunConfig import CSV, JSON

(EXIT_SUCCESS, EXIT_FAILURE, EXIT_USAGE) = range(3)
CSV_FLOAT_FORMAT = "%.12g"


def format_cell(cell):
    if isinstance(cell, bool):
        return "yes" if cell else "no"
    if isinstance(cell, float):
        return "%.6f" % cell
    if isinstance(cell, (list, tuple)):
        return ",".join(str(item) for item in cell)
    return str(cell)


class RunReport:
    """The result of one subcommand, ready to be written as text, JSON or CSV.

    `document` is the JSON form checked against `schema_name`; `headers` and
    `rows` are the table shared by the text and CSV forms; `summary` holds the
    (label, value) lines printed under the text table.
    """

    def __init__(self, document, schema_name, headers, rows, title=None, summary=(), passed=True):
        self._document = document
        self._schema_name = schema_name
        self._headers = list(headers)
        self._rows = [list(row) for row in rows]
        self._title = title
        self._summary = list(summary)
        self._passed = passed

    def document(self):
        return self._document

    def schema_name(self):
        return self._schema_name

    def headers(self):
        return self._headers

    def rows(self):
        return self._rows

    def title(self):
        return self._title

    def summary(self):
        return self._summary

    def passed(self):
        return self._passed


class Runner(ABC):
    def __init__(self, config):
        self._config = config
        self._logger = logging.getLogger("cmd")

    def config(self):
        return self._config

    @abstractmethod
    def execute(self) -> RunReport:
        """Run the subcommand and return its report."""
        pass

    def run(self):
        command = " ".join(self._config.command())
        self._logger.info("Running `%s`.", command)
        try:
            report = self.execute()
            output = self.render(report)
        except (BroadcastError, IOError) as e:
            self._logger.error("Unable to run `%s`.", command, exc_info=sys.exc_info())
            sys.stderr.write("colloq %s: %s\n" % (command, e))
            return EXIT_USAGE

        try:
            self.write(output, self._config.output_file())
        except IOError as e:
            self._logger.error("Unable to write the output of `%s` to `%s`.", command, self._config.output_file(),
                               exc_info=sys.exc_info())
            sys.stderr.write("colloq %s: unable to write output: %s\n" % (command, e))
            return EXIT_USAGE

        if not report.passed():
            self._logger.warning("`%s` finished with failed checks.", command)
            return EXIT_FAILURE
        self._logger.info("`%s` finished.", command)
        return EXIT_SUCCESS

    def render(self, report):
        output_format = self._config.output_format()
        if output_format == JSON:
            return serialization.dumps(report.document(), report.schema_name()) + "\n"
        if output_format == CSV:
            data_frame = pd.DataFrame(report.rows(), columns=report.headers())
            return data_frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT)

        table = DoubleTable([report.headers()] + [[format_cell(cell) for cell in row] for row in report.rows()],
                            report.title())
        text = table.table + "\n"
        if report.summary():
            summary = DoubleTable([[label, format_cell(value)] for label, value in report.summary()])
            summary.inner_heading_row_border = False
            text += summary.table + "\n"
        return text

    def write(self, output, path):
        if path is None:
            sys.stdout.write(output)
            return
        with open(path, "w", encoding="utf-8", newline="") as output_file:
            output_file.write(output)
        self._logger.info("Wrote `%s`.", path)

    def write_json(self, document, path, schema_name):
        """Write an extra JSON artifact next to the main output."""
        path = self._config.resolve(path)
        serialization.write_json(document, path, schema_name)
        self._logger.info("Wrote `%s`.", path)
