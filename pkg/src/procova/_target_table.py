"""Frozen population coefficients; regenerate with ``python -m procova.targets``.

samples=10000000, seed=20240917
"""

TABLE = {('A', 1, 'ancova'): (-2.461700121e-14, 0.835, 1.0),
 ('A', 1, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 1, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 2, 'ancova'): (-2.461700121e-14, 0.835, 1.0),
 ('A', 2, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 2, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 3, 'ancova'): (-2.461700121e-14, 0.835, 1.0),
 ('A', 3, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 3, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 4, 'ancova'): (2.668471414e-13, 0.835, 1.0),
 ('A', 4, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 4, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 5, 'ancova'): (2.668471414e-13, 0.835, 1.0),
 ('A', 5, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 5, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 6, 'ancova'): (2.668471414e-13, 0.835, 1.0),
 ('A', 6, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 6, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 7, 'ancova'): (3.278116693e-12, 0.835, 1.0),
 ('A', 7, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 7, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 8, 'ancova'): (3.278116693e-12, 0.835, 1.0),
 ('A', 8, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 8, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('A', 9, 'ancova'): (3.278116693e-12, 0.835, 1.0),
 ('A', 9, 'ancova-centered'): (-3.67319537, 0.835, 1.0),
 ('A', 9, 'anhecova'): (-3.67319537, 0.835, 1.0, 9.812822493e-15),
 ('B', 1, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 1, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 1, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 2, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 2, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 2, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 3, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 3, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 3, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 4, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 4, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 4, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 5, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 5, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 5, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 6, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 6, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 6, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 7, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 7, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 7, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 8, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 8, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 8, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('B', 9, 'ancova'): (-1.810727978, 0.8343906089, 0.5070428343),
 ('B', 9, 'ancova-centered'): (-3.67319537, 0.8343906089, 0.5070428343),
 ('B', 9, 'anhecova'): (-3.67319537, 0.8343906089, 1.0, -0.9859143313),
 ('C', 1, 'ancova'): (-0.005238405995, 0.835, 1.000789804),
 ('C', 1, 'ancova-centered'): (5.057042739, 0.835, 1.000789804),
 ('C', 1, 'anhecova'): (5.057042739, 0.835, 1.000789804, 1.494142439e-13),
 ('C', 2, 'ancova'): (-0.676719505, 0.835, 1.42186753),
 ('C', 2, 'ancova-centered'): (5.057042739, 0.835, 1.42186753),
 ('C', 2, 'anhecova'): (5.057042739, 0.835, 1.42186753, 2.578330353e-13),
 ('C', 3, 'ancova'): (5.095380996, 0.835, -0.6640124864),
 ('C', 3, 'ancova-centered'): (5.057042739, 0.835, -0.6640124864),
 ('C', 3, 'anhecova'): (5.057042739, 0.835, -0.6640124864, -3.046234215e-14),
 ('C', 4, 'ancova'): (-0.005406279577, 0.835, 1.000789804),
 ('C', 4, 'ancova-centered'): (5.057042739, 0.835, 1.000789804),
 ('C', 4, 'anhecova'): (5.057042739, 0.835, 1.000789804, 1.449672688e-13),
 ('C', 5, 'ancova'): (-0.6775298532, 0.835, 1.42186753),
 ('C', 5, 'ancova-centered'): (5.057042739, 0.835, 1.42186753),
 ('C', 5, 'anhecova'): (5.057042739, 0.835, 1.42186753, 2.479163801e-13),
 ('C', 6, 'ancova'): (5.096142513, 0.835, -0.6640124864),
 ('C', 6, 'ancova-centered'): (5.057042739, 0.835, -0.6640124864),
 ('C', 6, 'anhecova'): (5.057042739, 0.835, -0.6640124864, -2.998619186e-14),
 ('C', 7, 'ancova'): (5.270681395, 0.835, -0.02663843658),
 ('C', 7, 'ancova-centered'): (5.057042739, 0.835, -0.02663843658),
 ('C', 7, 'anhecova'): (5.057042739, 0.835, -0.02663843658, 1.543975957e-13),
 ('C', 8, 'ancova'): (6.338440895, 0.835, -0.1831820615),
 ('C', 8, 'ancova-centered'): (5.057042739, 0.835, -0.1831820615),
 ('C', 8, 'anhecova'): (5.057042739, 0.835, -0.1831820615, 1.221758501e-13),
 ('C', 9, 'ancova'): (5.927926195, 0.835, -0.288196543),
 ('C', 9, 'ancova-centered'): (5.057042739, 0.835, -0.288196543),
 ('C', 9, 'anhecova'): (5.057042739, 0.835, -0.288196543, 1.623257758e-14),
 ('D', 1, 'ancova'): (1.216158989, 0.8358518558, 0.7593251314),
 ('D', 1, 'ancova-centered'): (5.057042739, 0.8358518558, 0.7593251314),
 ('D', 1, 'anhecova'): (5.057042739, 0.8358518558, 1.000789804, -0.4829293452),
 ('D', 2, 'ancova'): (0.5952128644, 0.8358518558, 1.106451707),
 ('D', 2, 'ancova-centered'): (5.057042739, 0.8358518558, 1.106451707),
 ('D', 2, 'anhecova'): (5.057042739, 0.8358518558, 1.42186753, -0.6308316457),
 ('D', 3, 'ancova'): (5.082144808, 0.8358518558, -0.4347638243),
 ('D', 3, 'ancova-centered'): (5.057042739, 0.8358518558, -0.4347638243),
 ('D', 3, 'anhecova'): (5.057042739, 0.8358518558, -0.6640124864, 0.4584973241),
 ('D', 4, 'ancova'): (1.216031619, 0.8358518558, 0.7593251314),
 ('D', 4, 'ancova-centered'): (5.057042739, 0.8358518558, 0.7593251314),
 ('D', 4, 'anhecova'): (5.057042739, 0.8358518558, 1.000789804, -0.4829293452),
 ('D', 5, 'ancova'): (0.5945822774, 0.8358518558, 1.106451707),
 ('D', 5, 'ancova-centered'): (5.057042739, 0.8358518558, 1.106451707),
 ('D', 5, 'anhecova'): (5.057042739, 0.8358518558, 1.42186753, -0.6308316457),
 ('D', 6, 'ancova'): (5.082643413, 0.8358518558, -0.4347638243),
 ('D', 6, 'ancova-centered'): (5.057042739, 0.8358518558, -0.4347638243),
 ('D', 6, 'anhecova'): (5.057042739, 0.8358518558, -0.6640124864, 0.4584973241),
 ('D', 7, 'ancova'): (5.030261208, 0.8358518558, 0.003339368134),
 ('D', 7, 'ancova-centered'): (5.057042739, 0.8358518558, 0.003339368134),
 ('D', 7, 'anhecova'): (5.057042739, 0.8358518558, -0.02663843658, 0.05995560943),
 ('D', 8, 'ancova'): (5.845135706, 0.8358518558, -0.1126616997),
 ('D', 8, 'ancova-centered'): (5.057042739, 0.8358518558, -0.1126616997),
 ('D', 8, 'anhecova'): (5.057042739, 0.8358518558, -0.1831820615, 0.1410407236),
 ('D', 9, 'ancova'): (5.662767452, 0.8358518558, -0.2004490579),
 ('D', 9, 'ancova-centered'): (5.057042739, 0.8358518558, -0.2004490579),
 ('D', 9, 'anhecova'): (5.057042739, 0.8358518558, -0.288196543, 0.1754949701)}
