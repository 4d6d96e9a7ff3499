"""公共组件: 异常、数据模型基类与枚举"""
