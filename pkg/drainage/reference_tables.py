#!/usr/bin/env python3
"""
Reference table presets and published numbers

A preset fills the command-line flags of one table, figure or cost run.
Published numbers are kept verbatim in their printed format (comma decimal
separator, Fortran E-notation) and read with parse_published_number.
"""

TABLE_PRESETS = {
    'table2': {
        'command': 'table', 'problem': 'tanh', 'c': 3.0, 't': 0.1,
        'xs': '-10:0:2', 'terms': 10, 'methods': 'rdtm,adm,ldm',
        'description': 'Absolute errors, ten terms, t = 0.1, c = 3 (tanh wave)'
    },
    'table3': {
        'command': 'table', 'problem': 'tanh', 'c': 3.0, 't': 0.01,
        'xs': '-10:0:2', 'terms': 10, 'methods': 'rdtm,adm,ldm',
        'description': 'Absolute errors, ten terms, t = 0.01, c = 3 (tanh wave)'
    },
    'table4': {
        'command': 'table', 'problem': 'tanh', 'c': 3.0, 't': 0.001,
        'xs': '-10:0:2', 'terms': 10, 'methods': 'rdtm,adm,ldm',
        'description': 'Absolute errors, ten terms, t = 0.001, c = 3 (tanh wave)'
    },
    'table6': {
        # captioned t = 1; every printed value is the t = 0.1 partial sum
        'command': 'table', 'problem': 'logistic', 't': 0.1,
        'xs': '-10:0:1', 'terms': 10, 'methods': 'rdtm,adm,ldm',
        'description': 'Method values, logistic front (caption t = 1, values match t = 0.1)'
    },
    'figure1': {
        'command': 'figure', 'problem': 'tanh', 'c': 1.0, 't': 0.01,
        'xs': '-10:0:0.1', 'terms': 10,
        'description': 'RDTM absolute error curve, t = 0.01, c = 1'
    },
    'figure2': {
        'command': 'figure', 'problem': 'tanh', 'c': 2.0, 't': 0.01,
        'xs': '-10:0:0.1', 'terms': 10,
        'description': 'RDTM absolute error curve, t = 0.01, c = 2'
    },
    'table5': {
        'command': 'bench', 'problem': 'tanh', 'c': 3.0,
        'steps': '5,10,15,20,25', 'reps': 5, 'methods': 'rdtm,adm,ldm',
        'description': 'Cost comparison for the tanh wave, 5..25 steps'
    },
    'table7': {
        'command': 'bench', 'problem': 'logistic',
        'steps': '5,10,15,20,25', 'reps': 5, 'methods': 'rdtm,adm,ldm',
        'description': 'Cost comparison for the logistic front, 5..25 steps'
    },
}


PUBLISHED_VALUES = {
    'table2': {
        -10: {'adm': '0,202117817743509E-14', 'ldm': '0,202117817743510E-14', 'rdtm': '0,202117817743509E-14'},
        -8: {'adm': '0,293257141972964E-14', 'ldm': '0,293257141972664E-14', 'rdtm': '0,293257141972964E-14'},
        -6: {'adm': '0,45650705281285E-15', 'ldm': '0,45650705281385E-15', 'rdtm': '0,45650705281285E-15'},
        -4: {'adm': '0,11116665360728E-12', 'ldm': '0,11116665464828E-12', 'rdtm': '0,11116665360828E-12'},
        -2: {'adm': '0,851484003871439E-10', 'ldm': '0,851483993870438E-10', 'rdtm': '0,851484003871439E-10'},
        0: {'adm': '0,10317037658E-4', 'ldm': '0,10317037658E-4', 'rdtm': '0,10317037658E-4'},
    },
    'table3': {
        -10: {'adm': '0,308694683847448E-15', 'ldm': '0,308694683847448E-15', 'rdtm': '0,308694683847448E-15'},
        -8: {'adm': '0,507183534943173E-14', 'ldm': '0,507183534943173E-14', 'rdtm': '0,507183534943173E-14'},
        -6: {'adm': '0,728297653568755E-15', 'ldm': '0,728297653568755E-15', 'rdtm': '0,728297653568755E-15'},
        -4: {'adm': '0,695712017581145E-14', 'ldm': '0,695712017481141E-14', 'rdtm': '0,695712017581145E-14'},
        -2: {'adm': '0,682573115077685E-15', 'ldm': '0,682574115077685E-15', 'rdtm': '0,682573115077685E-15'},
        0: {'adm': '0,1E-15', 'ldm': '0,1E-15', 'rdtm': '0,1E-15'},
    },
    'table4': {
        -10: {'adm': '0,323329724865253E-16', 'ldm': '0,323329724865253E-16', 'rdtm': '0,323329724865253E-16'},
        -8: {'adm': '0,300092135265223E-14', 'ldm': '0,300092135265223E-14', 'rdtm': '0,300092135265223E-14'},
        -6: {'adm': '0,733106061807855E-14', 'ldm': '0,733106061807855E-14', 'rdtm': '0,733106061807855E-14'},
        -4: {'adm': '0,483644638909495E-14', 'ldm': '0,483644638909395E-14', 'rdtm': '0,483644638909495E-14'},
        -2: {'adm': '0,522768342580599E-14', 'ldm': '0,522768342680599E-14', 'rdtm': '0,522768342580599E-14'},
        0: {'adm': '0,4E-16', 'ldm': '0,4E-16', 'rdtm': '0,4E-16'},
    },
    # identical across the three methods
    'table6': {
        -10: '0,4999557229',
        -9: '0,4998796515',
        -8: '0,4996729266',
        -7: '0,4991114228',
        -6: '0,4975882790',
        -5: '0,4934713173',
        -4: '0,4824500775',
        -3: '0,4536908506',
        -2: '0,3833970310',
        -1: '0,2359453940',
        0: '0,006249674499',
    },
    'table5': {
        5: {'adm': '0,747sec', 'ldm': '1,212sec', 'rdtm': '0,488sec'},
        10: {'adm': '1,316sec', 'ldm': '2,813sec', 'rdtm': '1,025sec'},
        15: {'adm': '2,67sec', 'ldm': '4,656sec', 'rdtm': '1,846sec'},
        20: {'adm': '5,235sec', 'ldm': '9,478sec', 'rdtm': '3,738sec'},
        25: {'adm': '9,755sec', 'ldm': '15,910se', 'rdtm': '5,716sec'},
    },
    'table7': {
        5: {'adm': '0,745sec', 'ldm': '1,182sec', 'rdtm': '0,491sec'},
        10: {'adm': '1,524sec', 'ldm': '2,514sec', 'rdtm': '0,994sec'},
        15: {'adm': '3,292sec', 'ldm': '4,499sec', 'rdtm': '2,245sec'},
        20: {'adm': '7,068sec', 'ldm': '11,518sec', 'rdtm': '4,095sec'},
        25: {'adm': '14,153sec', 'ldm': '23,32sec', 'rdtm': '7,681sec'},
    },
}
