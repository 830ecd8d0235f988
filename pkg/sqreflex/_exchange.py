"""
.. module:: _exchange
    :platform: Unix, Windows
    :synopsis: Helper functions for exchange module

.. moduleauthor:: sqreflex developers

"""

from . import config, gf, polyring, quotalg, places, sqref, qforms, hyperell, corpus
from .exceptions import ParseError


# Initialize an empty __all__ for controlling imports
__all__ = []


def read_file(file_name, **kwargs):
    callback = kwargs.get('callback', None)
    try:
        with open(file_name, 'r') as fp:
            content = fp.read() if callback is None else callback(fp)
        return content
    except IOError as e:
        print("An error occurred: {}".format(e.args[-1]))
        raise e
    except Exception:
        raise


def write_file(file_name, content, **kwargs):
    callback = kwargs.get('callback', None)
    try:
        with open(file_name, 'w') as fp:
            if callback is None:
                fp.write(content)
            else:
                callback(fp, content)
        return True
    except IOError as e:
        print("An error occurred: {}".format(e.args[-1]))
        raise e
    except Exception:
        raise


def _header(kind, field):
    data = dict(schema=config.SCHEMA_VERSION, type=kind)
    if field is not None:
        data['field'] = str(field)
    return data


def _poly_str(f):
    return None if f is None else polyring.format_poly(f)


def _elem_str(x):
    if x is None:
        return None
    if isinstance(x, gf.FieldElem):
        return gf.format_element(x)
    return str(x)


def export_dict_cert(obj):
    data = _header('certificate', obj.f.field)
    data['f'] = _poly_str(obj.f)
    data['lc'] = _elem_str(obj.f.lc)
    data['classes'] = [dict(alpha=_poly_str(e.alpha.rep), witness_g=_poly_str(e.witness), path=e.path,
                            checks=dict(e.checks)) for e in obj]
    return data


def export_dict_refutation(obj):
    data = _header('refutation', obj.f.field)
    data['f'] = _poly_str(obj.f)
    data['alpha'] = _poly_str(obj.alpha.rep)
    return data


def export_dict_ramseq(obj):
    data = _header('ramification', obj.field)
    data['ramification'] = [dict(place=str(p), class_witness=_elem_str(obj[p].witness)) for p in obj.support]
    data['support'] = [str(p) for p in obj.support]
    return data


def export_dict_verdict(obj, form=None):
    data = _header('isotropy', form.field if form is not None else None)
    if form is not None:
        data['form'] = [_poly_str(v) for v in form.values]
    data['isotropic'] = obj.isotropic
    data['justification'] = obj.justification
    if obj.place is not None:
        data['place'] = str(obj.place)
    if obj.partner is not None:
        data['partner'] = _poly_str(obj.partner)
    if obj.witness is not None:
        data['witness'] = [_poly_str(x) for x in obj.witness]
    if obj.local_table is not None:
        data['local_table'] = [dict(place=str(p), isotropic=flag) for p, flag in obj.local_table]
    return data


def export_dict_point(obj, f=None, cap=None, complete=None):
    field = obj.f.field if obj is not None else f.field
    data = _header('odd_point', field)
    data['f'] = _poly_str(obj.f if obj is not None else f)
    data['found'] = obj is not None
    if obj is not None:
        data['degree'] = obj.degree
        data['p'] = _poly_str(obj.p)
        data['y'] = _poly_str(obj.y.rep)
    if cap is not None:
        data['cap'] = cap
    if complete is not None:
        data['complete'] = complete
    return data


def export_dict_transfer(system, pencil_ok, points, equivalence):
    data = _header('transfer', system.field)
    data['f'] = _poly_str(system.f)
    data['g'] = _poly_str(system.g)
    data['system_dims'] = list(system.dims)
    data['pencil_ok'] = pencil_ok
    data['ext_degree'] = points.ext_degree
    data['points_cprime'] = [[_elem_str(c) for c in pt] for pt in points.cprime_points]
    data['points_c'] = [[_elem_str(c) for c in pt] for pt in points.c_points]
    data['equivalence'] = dict(lhs=equivalence['lhs'], rhs=equivalence['rhs'], agree=equivalence['agree'],
                               parameter=_elem_str(equivalence['parameter']))
    return data


def export_dict_corpus(obj):
    data = _header('corpus', obj.field)
    data['kind'] = obj.kind
    data['parameters'] = dict(obj.parameters)
    data['results'] = list(obj.results)
    data['counters'] = dict(obj.counters)
    if obj.wall_time is not None:
        data['wall_time'] = obj.wall_time
    return data


def export_dict(obj, **kwargs):
    if isinstance(obj, sqref.SqRefCertificate):
        return export_dict_cert(obj)
    if isinstance(obj, sqref.SqRefRefutation):
        return export_dict_refutation(obj)
    if isinstance(obj, places.RamSeq):
        return export_dict_ramseq(obj)
    if isinstance(obj, qforms.IsotropyVerdict):
        return export_dict_verdict(obj, kwargs.get('form', None))
    if isinstance(obj, hyperell.OddPoint):
        return export_dict_point(obj)
    if isinstance(obj, corpus.CorpusReport):
        return export_dict_corpus(obj)
    if isinstance(obj, dict):
        data = dict(obj)
        data.setdefault('schema', config.SCHEMA_VERSION)
        return data
    raise TypeError("Object type " + type(obj).__name__ + " is not defined for dict export")


def export_dict_str(obj, callback, **kwargs):
    # Execute callback function
    return callback(export_dict(obj, **kwargs))


def import_dict_cert(data):
    if data.get('schema', None) != config.SCHEMA_VERSION:
        raise ParseError("Unsupported schema version: " + str(data.get('schema', None)))
    if data.get('type', None) != 'certificate':
        raise ParseError("Not a certificate: " + str(data.get('type', None)))
    field = gf.parse_field(data['field'])
    f = polyring.parse_poly(field, data['f'])
    alg = quotalg.QuotAlg(f) if not f.is_constant() else None
    entries = []
    for e in data['classes']:
        alpha = alg(polyring.parse_poly(field, e['alpha']))
        g = polyring.parse_poly(field, e['witness_g'])
        entries.append(sqref.CertificateEntry(alpha, g, e['path'], sqref.verify_witness(f, alpha, g)))
    return sqref.SqRefCertificate(f, entries)

