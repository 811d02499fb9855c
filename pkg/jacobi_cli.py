import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import pydantic

from app.errors import DivisibilityError, JacobiError, ParseError, RingError, ValidationError
from app.genus import chi_y_polynomial, divisibility_report, elliptic_genus, relation_check
from app.hodge.extractor import FORMATS, read_hodge_table
from app.jacobi.forms import form_from_expression
from app.mappings import ARITHMETIC_LIFTS, DEFAULT_PMAX, DEFAULT_QMAX, DEFAULT_SMAX, LINE, LIFT_KINDS, SUITES
from app.models import GenusRequest
from app.reports import CheckReport
from app.series import render_rows
from app.siegel.arithmetic import arithmetic_lift, delta_half_theta
from app.siegel.lifts import SiegelSeries, exp_lift, lift_divisor, named_lift, required_qprec
from app.siegel.quantized import assemble_e_form, e_form, sqeg
from app.verify import run_suite

logging.basicConfig(
    level=logging.INFO,
    format='%(levelname)s:\t%(message)s'
)
logger = logging.getLogger(__name__)


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(' ', '').split(',') if x]
    except ValueError:
        raise ParseError(f"Ожидался список целых через запятую, получено: {text}")


def emit(args, lines: List[str], payload: dict):
    """Текст построчно или JSON; --out направляет вывод в файл."""
    if args.json:
        text = json.dumps(payload, ensure_ascii=False, indent=2) + '\n'
    else:
        text = '\n'.join(lines) + '\n'
    if args.out:
        Path(args.out).write_text(text, encoding='utf-8')
        logger.info(f"Результат записан в {args.out}")
    else:
        sys.stdout.write(text)


def invariants_from_args(args):
    hodge = read_hodge_table(args.hodge, args.format) if args.hodge else None
    d = args.d
    if d is None and hodge is not None:
        d = len(hodge) - 1
    if d is None:
        raise ValidationError("Поле 'd' обязательно, если не задан файл --hodge")
    request = GenusRequest(
        d=d,
        chi=parse_int_list(args.chi) if args.chi else None,
        hodge=hodge,
        euler=args.euler,
        xi6_coefficient=args.xi6,
    )
    return request.invariants(), request.xi6_coefficient


def siegel_lines(lifted: SiegelSeries) -> List[str]:
    try:
        return render_rows(lifted.expand())
    except (DivisibilityError, RingError):
        nq, ly, ms = lifted.prefactor
        lines = [f"префактор: q^({nq}/24) y^({ly}/4) s^({ms}/24), фаза {lifted.phase}",
                 f"множители (1 - y^-k/4)^e: {list(lifted.y_factors)}"]
        return lines + render_rows(lifted.body)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Слабые формы Якоби, эллиптические роды CY и подъёмы Зигеля в точной арифметике',
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--qmax', type=int, default=DEFAULT_QMAX, metavar='N',
                        help='Число целых порядков q')
    common.add_argument('--smax', type=int, default=DEFAULT_SMAX, metavar='N',
                        help='Число целых порядков s для рядов Зигеля')
    common.add_argument('--pmax', type=int, default=DEFAULT_PMAX, metavar='N',
                        help='Старшая степень p в SQEG (включительно)')
    common.add_argument('--json', action='store_true', help='Вывод в JSON')
    common.add_argument('--out', type=str, metavar='FILE', help='Записать результат в файл')

    cy = argparse.ArgumentParser(add_help=False)
    cy.add_argument('--d', type=int, metavar='D', help='Комплексная размерность')
    cy.add_argument('--chi', type=str, metavar='LIST', help='χ_0..χ_d через запятую')
    cy.add_argument('--hodge', type=str, metavar='PATH', help='Файл с таблицей h^{p,q}')
    cy.add_argument('--format', type=str, choices=FORMATS, metavar='FORMAT', help='Уточнение формата файла')
    cy.add_argument('--euler', type=int, metavar='E', help='Эйлерова характеристика (d = 3, 5)')
    cy.add_argument('--xi6', type=int, metavar='C', help='Коэффициент при ξ_{0,6} (d = 12, 13)')

    subparsers = parser.add_subparsers(dest='command', help='Доступные команды', required=True)

    expand_parser = subparsers.add_parser('expand', parents=[common], help='Разложение формы Якоби')
    expand_parser.add_argument('form', type=str, help='Имя генератора или многочлен от Φ1..Φ4')

    subparsers.add_parser('genus', parents=[common, cy], help='Эллиптический род CY-многообразия')

    lift_parser = subparsers.add_parser('lift', parents=[common, cy], help='Ряды Зигеля')
    lift_parser.add_argument('kind', choices=LIFT_KINDS, help='Вид подъёма')
    lift_parser.add_argument('--form', type=str, metavar='EXPR', help='Исходная форма (explift, sqeg)')
    lift_parser.add_argument('--name', type=str, metavar='NAME', help='Именованная форма (explift, arith)')
    lift_parser.add_argument('--bound', type=int, metavar='N', help='Окно q, s для arith')
    lift_parser.add_argument('--assemble', action='store_true',
                             help='eform: сборка из базисных подъёмов')
    lift_parser.add_argument('--divisor', action='store_true', help='explift: дивизоры Гумберта')

    verify_parser = subparsers.add_parser('verify', parents=[common], help='Наборы проверок')
    verify_parser.add_argument('suite', choices=SUITES, help='Набор проверок')
    verify_parser.add_argument('--samples', type=int, default=None, metavar='N',
                               help='Число случайных форм')

    return parser


def command_expand(args):
    form = form_from_expression(args.form, 24 * args.qmax)
    lines = [f"{args.form}: вес {form.weight2}/2, индекс {form.index2}/2"] + render_rows(form.series)
    emit(args, lines, form.to_json())
    return 0


def command_genus(args):
    inv, xi6 = invariants_from_args(args)
    logger.info(LINE)
    logger.info(f"ЭЛЛИПТИЧЕСКИЙ РОД d={inv.d}")
    logger.info(LINE)

    relations = relation_check(inv)
    phi = elliptic_genus(inv, 24 * args.qmax, xi6)
    divisibility = divisibility_report(phi)
    chi_y = chi_y_polynomial(phi)

    lines = [f"χ = {inv.chi}, e = {inv.euler}", f"χ_y: {chi_y}"] + render_rows(phi.series)
    lines += [str(relations), str(divisibility)]
    payload = {
        "d": inv.d,
        "chi": inv.chi,
        "euler": inv.euler,
        "chi_y": chi_y,
        "genus": phi.to_json(),
        "relations": relations.to_json(),
        "divisibility": divisibility.to_json(),
    }
    emit(args, lines, payload)
    if not divisibility.passed:
        return DivisibilityError.exit_code
    return 0


def _lift_source(args, t_hint: Optional[int] = None):
    if not args.form:
        raise ValidationError("Поле 'form' обязательно для этого вида подъёма")
    probe = form_from_expression(args.form, 24)
    t = t_hint if t_hint is not None else probe.index
    return form_from_expression(args.form, max(24, required_qprec(t, args.qmax, args.smax)))


def command_lift(args):
    logger.info(LINE)
    logger.info(f"ПОДЪЁМ: {args.kind}")
    logger.info(LINE)
    extra = {}

    if args.kind == 'explift':
        if args.name:
            lifted = named_lift(args.name, args.qmax, args.smax)
        else:
            phi = _lift_source(args)
            lifted = exp_lift(phi, args.qmax, args.smax)
            if args.divisor:
                extra['divisor'] = [h.to_json() for h in lift_divisor(phi)]
    elif args.kind == 'sqeg':
        qprec = 24 * ((args.qmax - 1) * args.pmax + 1)
        if args.form:
            phi = form_from_expression(args.form, max(24, qprec))
        else:
            inv, xi6 = invariants_from_args(args)
            phi = elliptic_genus(inv, max(24, qprec), xi6)
        series = sqeg(phi, args.pmax, args.qmax)
        emit(args, render_rows(series), series.to_json())
        return 0
    elif args.kind == 'eform':
        inv, xi6 = invariants_from_args(args)
        if args.assemble:
            lifted = assemble_e_form(inv, args.qmax, args.smax)
        else:
            lifted = e_form(inv, args.qmax, args.smax, xi6)
    else:
        name = args.name or 'Delta2'
        qmax = smax = args.bound or args.qmax
        canonical = ARITHMETIC_LIFTS.get(name, ARITHMETIC_LIFTS.get(name.lower()))
        if canonical == 'DeltaHalf':
            lifted = delta_half_theta(qmax, smax)
        else:
            lifted = arithmetic_lift(name, qmax, smax)

    lines = siegel_lines(lifted)
    payload = lifted.to_json()
    if extra:
        payload.update(extra)
        lines += [f"H_{h['D']}({h['b']}): {h['multiplicity']}" for h in extra['divisor']]
    emit(args, lines, payload)
    return 0


def command_verify(args):
    kwargs = {} if args.samples is None else {'samples': args.samples}
    report: CheckReport = run_suite(args.suite, args.qmax, **kwargs)
    failures = report.failures()

    emit(args, [str(report)], {"suite": args.suite, "passed": report.passed, "checks": report.to_json()})

    if failures:
        logger.info(LINE)
        logger.info(f"ДЕТАЛИ ОШИБОК ({len(failures)} шт.)")
        logger.info(LINE)
        for i, entry in enumerate(failures[:50], 1):
            logger.error(f"[Ошибка {i}] {entry['check']}")
        if len(failures) > 50:
            logger.info(f"... и еще {len(failures) - 50} ошибок")
        return 3

    logger.info("Все проверки пройдены")
    return 0


def run_command(command, args) -> int:
    try:
        return command(args)
    except JacobiError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except pydantic.ValidationError as e:
        logger.error(f"Некорректные входные данные: {e}")
        return 2
    except Exception as e:
        logger.error(f"Критическая ошибка: {e}")
        return 1


def main(argv=None):
    parser = create_parser()
    args = parser.parse_args(argv)

    if args.command == 'expand':
        exit_code = run_command(command_expand, args)
    elif args.command == 'genus':
        exit_code = run_command(command_genus, args)
    elif args.command == 'lift':
        exit_code = run_command(command_lift, args)
    elif args.command == 'verify':
        exit_code = run_command(command_verify, args)
    else:
        parser.print_help()
        exit_code = 1

    sys.exit(exit_code)


if __name__ == '__main__':
    main()
