"""
.. module:: exchange
    :platform: Unix, Windows
    :synopsis: Provides JSON import and export of certificates, verdicts and reports

.. moduleauthor:: sqreflex developers

"""

import json
from . import sqref
from . import _exchange as exch
from .exceptions import ConsistencyError
from ._utilities import export

__all__ = []


def _dumps(data):
    return json.dumps(data, indent=4, sort_keys=True)


@export
def export_json_str(obj, **kwargs):
    """ Serializes a result object in JSON format.

    Supported objects are certificates, refutations, ramification sequences, isotropy verdicts (pass the form as
    ``form``), odd points, corpus reports and plain dictionaries. Keys are sorted, so equal results give identical
    text.

    :param obj: result object
    :return: JSON text
    :rtype: str
    """
    return exch.export_dict_str(obj, callback=_dumps, **kwargs)


@export
def export_json(obj, file_name, **kwargs):
    """ Exports a result object to a JSON file.

    :param obj: result object
    :param file_name: name of the output file
    :type file_name: str
    :raises IOError: an error occurred writing the file
    """
    return exch.write_file(file_name, export_json_str(obj, **kwargs) + "\n")


@export
def import_json(file_name):
    """ Imports a JSON file as a dictionary.

    :param file_name: name of the input file
    :type file_name: str
    :rtype: dict
    :raises IOError: an error occurred reading the file
    """
    return json.loads(exch.read_file(file_name))


@export
def import_certificate(file_name):
    """ Imports a square-reflexivity certificate and re-verifies it.

    :param file_name: name of the input file
    :type file_name: str
    :return: certificate with freshly computed checks
    :rtype: sqref.SqRefCertificate
    :raises ConsistencyError: the certificate fails verification
    """
    cert = exch.import_dict_cert(import_json(file_name))
    if not sqref.verify_certificate(cert):
        raise ConsistencyError("Certificate for " + str(cert.f) + " in " + file_name + " fails verification")
    return cert


@export
def point_report(point, f, cap=None, complete=None):
    """ Report of an odd-degree point search; ``found`` is False when ``point`` is None.

    :rtype: dict
    """
    return exch.export_dict_point(point, f=f, cap=cap, complete=complete)


@export
def transfer_report(system, pencil_ok, points, equivalence):
    """ Report of a transfer curve: system dimensions, pencil check, points and both sides of the point criterion.

    :rtype: dict
    """
    return exch.export_dict_transfer(system, pencil_ok, points, equivalence)
